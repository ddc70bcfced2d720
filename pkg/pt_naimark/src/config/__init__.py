from pt_naimark.src.config.config_object import CliConfig, parse_grid
