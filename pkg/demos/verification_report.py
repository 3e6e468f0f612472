"""
Running the verification suites
================================

Every identity the package relies on has a suite. This runs them all and
lists the formulas whose literal transcription needed a correction.
"""

from hankel_exact.verify import run_all

report = run_all()
for res in report.suites:
    print(f"{res.name:20s} {res.cases:5d} {'ok' if res.passed else 'FAIL'}")

for f in report.findings:
    if not f.printed_holds:
        print(f"{f.formula}: {f.printed_counterexample}")
