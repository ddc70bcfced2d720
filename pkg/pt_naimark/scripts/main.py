"""
Main entry point for the pt_naimark CLI.
"""


def main():
    """
    Run the click CLI, showing the help text when called without arguments.

        python -m pt_naimark.scripts.main analyze --epsilon 0.1 --omega0 1
        pt-naimark verify
    """
    import sys
    from pt_naimark.src.cli import cli

    if len(sys.argv) == 1:
        sys.argv.append('--help')

    cli()


if __name__ == '__main__':
    main()
