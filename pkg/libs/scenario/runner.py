"""Evaluate a parsed scenario and compare its models against expectations."""

from typing import Dict, Optional, Tuple

from libs.core.errors import UnboundIdentifierError, WallCalcError
from libs.core.logging import get_logger
from libs.core.models import CheckResult, ModelResult, VerificationReport
from libs.motivic.polyring import Polynomial, format_polynomial
from libs.motivic.strata import EMPTY_ENV, Environment, assemble, eval_expr
from .syntax import ModelDecl, Scenario

logger = get_logger("scenario.runner")

TOO_DEEP = "expression nested too deeply"


def _bind(scenario: Scenario) -> Tuple[Environment, Dict[str, str]]:
    """Evaluate bindings in order; failed ones are left out of the environment."""
    env = EMPTY_ENV
    failures: Dict[str, str] = {}
    for binding in scenario.bindings:
        try:
            env = env.extend(binding.name, eval_expr(binding.expr, env))
        except (WallCalcError, RecursionError) as e:
            failures[binding.name] = TOO_DEEP if isinstance(e, RecursionError) else str(e)
            logger.warning(
                f"binding '{binding.name}' failed: {failures[binding.name]}",
                extra={"scenario": scenario.name},
            )
    return env, failures


def _evaluate_model(
    scenario: Scenario,
    decl: ModelDecl,
    env: Environment,
    failures: Dict[str, str]
) -> Tuple[Optional[Polynomial], Optional[str]]:
    try:
        value = eval_expr(decl.expr, env)
        if decl.with_walls:
            value = assemble(value, scenario.walls, env)
    except UnboundIdentifierError as e:
        if e.name in failures:
            return None, f"binding '{e.name}': {failures[e.name]}"
        return None, str(e)
    except WallCalcError as e:
        return None, str(e)
    except RecursionError:
        return None, TOO_DEEP
    return value, None


def run_scenario(scenario: Scenario) -> VerificationReport:
    """
    Evaluate every model of a scenario and check its expectations.

    A failing binding or model is recorded on the report; the remaining
    models are still evaluated.
    """
    env, failures = _bind(scenario)

    values: Dict[str, Optional[Polynomial]] = {}
    errors: Dict[str, Optional[str]] = {}
    models = []
    for decl in scenario.models:
        value, error = _evaluate_model(scenario, decl, env, failures)
        values[decl.name], errors[decl.name] = value, error
        if error:
            logger.warning(
                f"model evaluation failed: {error}",
                extra={"scenario": scenario.name, "model": decl.name},
            )
        else:
            logger.debug(
                f"euler={value.eval_at(1)}",
                extra={"scenario": scenario.name, "model": decl.name},
            )
        models.append(ModelResult(
            name=decl.name,
            value=format_polynomial(value) if value is not None else None,
            error=error,
        ))

    checks = []
    for expectation in scenario.expectations:
        computed = values.get(expectation.model)
        if computed is None:
            checks.append(CheckResult(
                name=expectation.model,
                expected=format_polynomial(expectation.value),
                passed=False,
                error=errors.get(expectation.model) or "model was not evaluated",
            ))
            continue
        residual = computed - expectation.value
        checks.append(CheckResult(
            name=expectation.model,
            expected=format_polynomial(expectation.value),
            computed=format_polynomial(computed),
            residual=format_polynomial(residual),
            passed=residual.is_zero(),
        ))

    report = VerificationReport(scenario=scenario.name, checks=checks, models=models)
    logger.info(
        f"{sum(c.passed for c in checks)}/{len(checks)} checks passed",
        extra={"scenario": scenario.name},
    )
    return report
