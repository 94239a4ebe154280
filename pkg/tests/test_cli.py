import subprocess
import sys

import pytest

from circprog.cli import DEMOS, VARIANTS, main, parse_report, run_demo
from circprog.engine import AllocStats


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ones(capsys):
    code, out, _ = run(["demo", "ones", "--take", "5"], capsys)
    assert code == 0
    data, st = parse_report(out)
    assert data == ["1"] * 5
    assert st.cells_allocated == 1


def test_primes_circular(capsys):
    code, out, _ = run(["demo", "primes", "--variant", "circular", "--count", "10"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "2,3,5,7,11,13,17,19,23,29"


def test_unique_inline(capsys):
    code, out, _ = run(["demo", "unique", "--input", "1,2,1,3,2"], capsys)
    assert (code, out.splitlines()[0]) == (0, "1,2,3")


def test_unique_from_file(tmp_path, capsys):
    f = tmp_path / "xs.txt"
    f.write_text("4\n4\n2\n\n4\n9\n")
    code, out, _ = run(["demo", "uniqueF", "--file", str(f)], capsys)
    assert (code, out.splitlines()[0]) == (0, "4,2,9")


def test_isprime_queries(capsys):
    code, out, _ = run(["demo", "primes", "--variant", "isprime", "--input", "97,91"], capsys)
    assert out.splitlines()[0] == "true,false"


@pytest.mark.parametrize(
    "name,variant", [(n, None) for n in DEMOS] + [(n, v) for n, vs in VARIANTS.items() for v in vs]
)
def test_every_demo_defaults(name, variant, capsys):
    argv = ["demo", name] + (["--variant", variant] if variant else [])
    code, out, _ = run(argv, capsys)
    assert code == 0
    data, st = parse_report(out)
    assert data
    assert AllocStats.from_text(st.to_text()) == st


def test_stats_round_trip():
    report = run_demo("circ")
    data, st = parse_report(report.to_text())
    assert st == report.stats
    assert data == [str(x) for x in report.output]


@pytest.mark.parametrize(
    "argv",
    [
        ["demo", "nope"],
        ["demo", "ones", "--take", "-1"],
        ["demo", "ones", "--variant", "sieve"],
        ["demo", "unique", "--input", "1,x"],
        ["demo", "unique", "--input", "1", "--file", "f"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_runtime_error_exit_code(capsys):
    code, _, err = run(["demo", "circ", "--count", "0", "--budget", "20", "--take", "30"], capsys)
    assert code == 1
    assert "error" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "circprog", "demo", "ones", "--take", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.splitlines()[0] == "1,1,1"
