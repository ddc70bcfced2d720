from pt_naimark.src.logging_utils.make_logger import (
    get_logger,
    make_logger,
    reset_logging,
)
