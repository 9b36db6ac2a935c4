import sys
from contextlib import redirect_stdout

from wasabi import msg

from ..selftest import run_selftest


def selftest(verbose: bool = False):
    """
    Run the acceptance checks and exit with 1 if any fails.

    Parameters
    ----------
    verbose : bool, optional
        Print the detail of every check, by default False.
    """
    results = run_selftest(verbose=verbose)
    rows = [
        (r.name, "ok" if r.passed else "FAIL", f"{r.value:.6g}")
        for r in results
    ]
    with redirect_stdout(sys.stderr):
        msg.table(rows, header=("check", "status", "value"), divider=True)
        failed = [r.name for r in results if not r.passed]
        if failed:
            msg.fail(
                f"{len(failed)} checks failed", ", ".join(failed), exits=1
            )
        msg.good(f"All {len(results)} checks passed")
