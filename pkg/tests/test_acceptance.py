"""Acceptance suite: the seven exit criteria, one printed line each.

Criteria 3-6 assert on the shared full-battery run (tolerances live in the
battery checks: 1e-6 relative plus the documented grid cutoffs); criteria
1, 2, 5 recompute their values directly here; criterion 7 runs the CLI
twice and compares bytes.
"""

import math

import numpy as np

from exporlicz import (
    Gaussian,
    PointMass,
    Rademacher,
    luxemburg_norm,
    phi,
    phi_function,
    legendre_numeric,
    tau_norm,
)
from exporlicz.cli import main
from exporlicz.phi_core import Exponent

LN2 = math.log(2.0)


def _report(criterion, ok, detail):
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


class TestAcceptance:
    def test_criterion_1_exact_norm_values(self):
        worst = 0.0
        for p in (1.0, 1.5, 2.0, 3.0):
            for c in (0.5, 1.0, 10.0):
                got = luxemburg_norm(PointMass(c), p).value
                want = c * LN2 ** (-1.0 / p)
                worst = max(worst, abs(got - want) / want)
        for sigma in (1.0, 2.0):
            got = luxemburg_norm(Gaussian(sigma), 2.0).value
            want = sigma * math.sqrt(8.0 / 3.0)
            worst = max(worst, abs(got - want) / want)
            got_tau = tau_norm(Gaussian(sigma), 2.0).value
            worst = max(worst, abs(got_tau - sigma) / sigma)
        got_r = tau_norm(Rademacher(), 2.0).value
        worst = max(worst, abs(got_r - 1.0))
        _report(
            "criterion-1 exact-norm-values",
            worst <= 1e-6,
            f"max relative error {worst:.3e} (tolerance 1e-6)",
        )

    def test_criterion_2_conjugacy_oracle(self):
        ys = np.linspace(-5.0, 5.0, 401)
        worst = 0.0
        diverged = True
        for p in (1.0, 1.25, 1.5, 2.0, 3.0, 4.0):
            e = Exponent(p)
            f = phi_function(e)
            for y in ys:
                num = legendre_numeric(f, float(y))
                closed = phi(e.q, float(y))
                if math.isinf(closed):
                    diverged = diverged and (num > 1e6)
                else:
                    worst = max(worst, abs(num - closed))
        _report(
            "criterion-2 conjugacy",
            worst <= 1e-6 and diverged,
            f"max |legendre - phi_q| = {worst:.3e}; divergent cases "
            f"{'reported' if diverged else 'MISSED'}",
        )

    def test_criterion_3_constant_chain(self, full_battery):
        checks, _ = full_battery
        chain = [c for name, c in checks.items() if name.startswith("norm-chain")]
        bad = [c.name for c in chain if not c.ok]
        _report(
            "criterion-3 constant-chain",
            len(chain) >= 15 and not bad,
            f"{len(chain)} (model, p) chain checks, failures: {bad or 'none'}",
        )

    def test_criterion_4_two_sided_equivalence(self, full_battery):
        checks, _ = full_battery
        eq = [c for name, c in checks.items() if name.startswith("equivalence")]
        bad = [c.name for c in eq if not c.ok]
        _report(
            "criterion-4 two-sided-equivalence",
            len(eq) == 20 and not bad,
            f"{len(eq)} (model, p) equivalence checks, failures: {bad or 'none'}",
        )

    def test_criterion_5_hoeffding_suite(self, full_battery):
        checks, _ = full_battery
        hoef = [c for name, c in checks.items() if name.startswith("hoeffding")]
        bad = [c.name for c in hoef if not c.ok]
        names = {c.name for c in hoef}
        complete = (
            any("mgf" in n for n in names)
            and any("crossover" in n for n in names)
            and any("sum n=20" in n for n in names)
        )
        _report(
            "criterion-5 hoeffding-suite",
            complete and not bad,
            f"{len(hoef)} checks (mgf bound, both curves, crossover, sum),"
            f" failures: {bad or 'none'}",
        )

    def test_criterion_6_property_suites(self, full_battery):
        checks, _ = full_battery
        props = [
            c
            for name, c in checks.items()
            if name.startswith(("homogeneity", "monotone-feasibility"))
        ]
        bad = [c.name for c in props if not c.ok]
        _report(
            "criterion-6 property-suites",
            len(props) >= 7 and not bad,
            f"{len(props)} property checks, failures: {bad or 'none'}",
        )

    def test_criterion_7_cli_byte_determinism(self, capsys):
        runs = []
        for _ in range(2):
            code = main(["bounds", "--sum", "1,1,1,1", "--t", "0:5:0.25"])
            assert code == 0
            runs.append(capsys.readouterr().out.encode())
        bounds_same = runs[0] == runs[1]

        runs = []
        for _ in range(2):
            code = main(["battery", "--seed", "0"])
            assert code == 0
            runs.append(capsys.readouterr().out.encode())
        battery_same = runs[0] == runs[1]
        with capsys.disabled():
            _report(
                "criterion-7 cli-byte-determinism",
                bounds_same and battery_same,
                f"bounds identical: {bounds_same}; battery identical: {battery_same}"
                f" ({len(runs[0])} bytes)",
            )
