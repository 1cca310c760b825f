import io
import sys
from contextlib import redirect_stderr, redirect_stdout

from bipinterval.cli import main


def run(argv, stdin=""):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = main(argv)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def pipeline(gen_args, side="X", color_args=()):
    """gen -> color -> verify through files; returns the three exit codes and artifacts."""
    code_g, graph, _ = run(["gen", *gen_args])
    code_c, coloring, err = run(["color", "--graph", "-", "--side", side, *color_args], stdin=graph)
    if code_c != 0:
        return code_g, code_c, None, graph, coloring, err
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as d:
        g, c = Path(d, "g.txt"), Path(d, "c.txt")
        g.write_text(graph)
        c.write_text(coloring)
        code_v, report, _ = run(["verify", "--graph", str(g), "--coloring", str(c), "--side", side])
    return code_g, code_c, code_v, graph, coloring, report
