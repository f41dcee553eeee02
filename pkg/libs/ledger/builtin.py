"""The (5,2) wall-crossing as a scenario."""

from functools import lru_cache
from fractions import Fraction
from pathlib import Path

from libs.motivic.polyring import ZERO
from libs.motivic.strata import (
    Bundle,
    Difference,
    Ident,
    Literal,
    Product,
    Sum,
    WallTerm,
    hilb,
    proj,
    relhilb,
)
from libs.scenario.syntax import Binding, Expectation, ModelDecl, Scenario
from .golden import C3_WALL, M52, M52_3, MINF52, MPLUS52

BUILTIN_NAME = "builtin_52"
BUILTIN_PATH = Path(__file__).parent / "data" / f"{BUILTIN_NAME}.mwc"


def _simple_wall(alpha, plus_fiber: int, minus_fiber: int, base_factor: int, space: str) -> WallTerm:
    base = Product(proj(base_factor), Ident(space))
    return WallTerm(
        Fraction(alpha),
        (Bundle(proj(plus_fiber), base),),
        (Bundle(proj(minus_fiber), base),),
    )


@lru_cache(maxsize=1)
def builtin_scenario_52() -> Scenario:
    """
    M^infinity(5,2) assembled from M^+(5,2) and its five walls.

    The alpha = 3 wall is carried as its published polynomial; its
    stratum-level reconstruction lives in ``libs.ledger.reconstruct``.
    """
    bindings = (
        Binding("m52", Literal(M52)),
        Binding("m52_3", Sum(
            Bundle(proj(17), hilb(3)),
            Product(Product(Difference(proj(3), proj(3)), proj(2)), proj(14)),
        )),
        Binding("m_plus", Sum(
            Product(Difference(Ident("m52"), Ident("m52_3")), proj(1)),
            Product(Ident("m52_3"), proj(2)),
        )),
        Binding("b41", relhilb(4, 1)),
        Binding("b42", relhilb(4, 2)),
        Binding("b31", relhilb(3, 1)),
    )

    walls = (
        WallTerm(
            Fraction(18),
            (Bundle(proj(7), Product(proj(2), proj(14))),),
            (
                Bundle(proj(3), Product(proj(2), Difference(proj(14), proj(9)))),
                Bundle(proj(4), Product(proj(2), proj(9))),
            ),
        ),
        _simple_wall(13, 6, 3, 2, "b41"),
        _simple_wall(8, 5, 3, 2, "b42"),
        WallTerm(Fraction(3), (Literal(C3_WALL),), (Literal(ZERO),)),
        _simple_wall(Fraction(1, 2), 6, 5, 5, "b31"),
    )

    models = (
        ModelDecl("M52_3", Ident("m52_3")),
        ModelDecl("M_plus", Ident("m_plus")),
        ModelDecl("M_inf", Ident("m_plus"), with_walls=True),
    )

    expectations = (
        Expectation("M52_3", M52_3),
        Expectation("M_plus", MPLUS52),
        Expectation("M_inf", MINF52),
    )

    return Scenario(BUILTIN_NAME, bindings, walls, models, expectations)
