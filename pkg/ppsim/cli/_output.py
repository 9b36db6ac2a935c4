import sys
from contextlib import redirect_stdout
from pathlib import Path

from wasabi import msg


def fail(title: str, text: str = "", exits: int = None):
    """`msg.fail` on standard error, keeping standard output for data."""
    with redirect_stdout(sys.stderr):
        msg.fail(title, text, exits=exits)


def good(title: str, text: str = ""):
    with redirect_stdout(sys.stderr):
        msg.good(title, text)


def emit(text: str, out: Path = None, verbose: bool = None):
    """
    Write `text` to `out`, or to standard output when no path is given.
    """
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        out.write_text(text)
    except OSError as err:
        fail("Can't write output", f"{out}: {err}", exits=1)
    if verbose:
        good("Saved output", str(out))
