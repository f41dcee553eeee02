"""The fixed verification run behind ``wallctl verify``."""

from typing import List

from libs.core.errors import WallCalcError
from libs.core.logging import get_logger
from libs.core.models import CheckResult, Diagnostic, VerificationReport
from libs.motivic.motives import hilb_p2
from libs.motivic.polyring import Polynomial, format_polynomial
from libs.motivic.strata import EMPTY_ENV, Environment, assemble, eval_expr, wall_delta
from libs.scenario.runner import run_scenario
from .builtin import builtin_scenario_52
from .classes import (
    PairClass,
    chi_pair_self,
    expected_dim,
    extension_ledger,
    group_by_alpha,
    wall_enumerate,
)
from .golden import (
    HILB2,
    HILB3,
    HILB_EULER,
    LOCAL_PT_EULER,
    M52,
    M52_3,
    MINF52,
    MINF52_EULER,
    MPLUS52,
    WALL_EULERS,
)
from .pipeline import forgetful, m3_pipeline, mplus41
from .reconstruct import C3Reconstruction, EQUIVARIANT, NAIVE, reconstruct_c3

logger = get_logger("ledger.suite")


def _poly_check(name: str, expected: Polynomial, computed: Polynomial) -> CheckResult:
    residual = computed - expected
    return CheckResult(
        name=name,
        expected=format_polynomial(expected),
        computed=format_polynomial(computed),
        residual=format_polynomial(residual),
        passed=residual.is_zero(),
    )


def _value_check(name: str, expected, computed) -> CheckResult:
    return CheckResult(
        name=name,
        expected=str(expected),
        computed=str(computed),
        passed=expected == computed,
    )


def _builtin_env() -> Environment:
    env = EMPTY_ENV
    for binding in builtin_scenario_52().bindings:
        env = env.extend(binding.name, eval_expr(binding.expr, env))
    return env


def _checks() -> List[CheckResult]:
    checks = [
        _poly_check("hilb_p2(2)", HILB2, hilb_p2(2)),
        _poly_check("hilb_p2(3)", HILB3, hilb_p2(3)),
        _value_check(
            "euler hilb_p2(0..3)", HILB_EULER, tuple(hilb_p2(n).eval_at(1) for n in range(4))
        ),
    ]

    m3 = m3_pipeline()
    checks.append(_poly_check("m3_pipeline", M52_3, m3))
    checks.append(_value_check("degree m3_pipeline", expected_dim(PairClass(5, -2)), m3.degree))

    m_plus = forgetful(M52, m3)
    checks.append(_poly_check("forgetful", MPLUS52, m_plus))
    checks.append(_value_check("degree forgetful", expected_dim(PairClass(5, 2)), m_plus.degree))
    checks.append(_value_check("degree mplus41", expected_dim(PairClass(4, 1)), mplus41().degree))

    scenario = builtin_scenario_52()
    env = _builtin_env()
    assembled = assemble(m_plus, scenario.walls, env)
    checks.append(_poly_check("assembled M^inf(5,2)", MINF52, assembled))
    checks.append(_value_check("euler M^inf(5,2)", MINF52_EULER, assembled.eval_at(1)))
    checks.append(_value_check("constant term M^inf(5,2)", 1, assembled.eval_at(0)))
    checks.append(_value_check(
        "wall delta eulers",
        WALL_EULERS,
        tuple(wall_delta(w, env).eval_at(1) for w in scenario.walls),
    ))
    first = wall_delta(scenario.walls[0], env)
    checks.append(_value_check(
        "alpha=18 delta vanishes below p^5",
        True,
        all(first.coefficient(i) == 0 for i in range(5)),
    ))

    alphas = tuple(str(a) for a in group_by_alpha(wall_enumerate(PairClass(5, 2))))
    checks.append(_value_check("walls (5,2)", ("18", "13", "8", "3", "1/2"), alphas))
    for c, expected in (((5, -2), ("2",)), ((4, 1), ("3",))):
        found = tuple(str(a) for a in group_by_alpha(wall_enumerate(PairClass(*c))))
        checks.append(_value_check(f"walls {PairClass(*c)}", expected, found))

    checks.append(_value_check("chi_pair_self(5,2)", -26, chi_pair_self(PairClass(5, 2))))
    checks.append(_value_check("expected_dim(5,2)", 27, expected_dim(PairClass(5, 2))))
    dims = tuple((r.record.forward, r.record.reverse) for r in extension_ledger())
    checks.append(_value_check(
        "extension dimensions",
        ((8, 4), (7, 3), (6, 3), (5, 4), (8, 6), (7, 6), (4, 4)),
        dims,
    ))
    return checks


def verification_suite() -> List[CheckResult]:
    """Fixed checks on atoms, pipelines, the assembly and the wall ledger."""
    try:
        return _checks()
    except WallCalcError as e:
        logger.error(f"verification suite aborted: {e}")
        return [CheckResult(name="verification suite", expected="completed", passed=False, error=str(e))]


def reconstruction_diagnostics(r: C3Reconstruction) -> List[Diagnostic]:
    """Text rows describing a C3 reconstruction; reported, not asserted."""
    rows = [
        Diagnostic(name="C3 target", value=format_polynomial(r.target)),
        Diagnostic(name="a bracket", value=format_polynomial(r.a_bracket)),
        Diagnostic(name="euler a bracket", value=str(r.a_bracket.eval_at(1))),
    ]
    for variant in (EQUIVARIANT, NAIVE):
        v = r.variants[variant]
        rows += [
            Diagnostic(name=f"d bracket ({variant})", value=format_polynomial(v.d_bracket)),
            Diagnostic(name=f"euler a + d ({variant})", value=str((r.a_bracket + v.d_bracket).eval_at(1))),
            Diagnostic(name=f"implied b bracket ({variant})", value=format_polynomial(v.b_implied)),
            Diagnostic(name=f"euler b bracket ({variant})", value=str(v.b_implied.eval_at(1))),
        ]
        if v.recovered is not None:
            rows.append(Diagnostic(
                name=f"recovered M+(3,0) ({variant})",
                value=format_polynomial(v.recovered)
                + ("" if v.recovered_nonnegative else "  [negative coefficients]"),
            ))
        else:
            rows.append(Diagnostic(name=f"recovered M+(3,0) ({variant})", value=f"not divisible: {v.failure}"))
    return rows


def verification_report(include_reconstruction: bool = False) -> VerificationReport:
    """Built-in scenario run plus the fixed suite and informational rows."""
    report = run_scenario(builtin_scenario_52())
    report.checks.extend(verification_suite())
    report.diagnostics.append(Diagnostic(name="local P2 PT euler", value=str(LOCAL_PT_EULER)))
    report.diagnostics.append(
        Diagnostic(name="PT minus pair euler", value=str(LOCAL_PT_EULER - MINF52_EULER))
    )
    if include_reconstruction:
        report.diagnostics.extend(reconstruction_diagnostics(reconstruct_c3()))
    return report
