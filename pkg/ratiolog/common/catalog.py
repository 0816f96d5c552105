"""Built-in catalog of combinatorial sequences, extendable with sequence documents."""

from __future__ import annotations

import logging
import re
import threading

from ratiolog.common import config_utils
from ratiolog.common.ratfuncs import RatFunc
from ratiolog.common.sequences import GammaQuotientDef
from ratiolog.common.sequences import RecurrenceDef
from ratiolog.common.sequences import SequenceDef
from ratiolog.shared import collections
from ratiolog.shared import errors

logger = logging.getLogger(__name__)

FUSS_CATALAN = "fuss-catalan"
_FUSS_CATALAN_PATTERN = re.compile(rf"^{FUSS_CATALAN}-([0-9]+)$")
_ALIASES = {
    "derangements": "derangement",
    "motzkin-numbers": "motzkin",
    "catalan-numbers": "catalan",
}
_FUSS_CATALAN_OEIS = {
    2: "A000108",
    3: "A001764",
    4: "A002293",
    5: "A002294",
}


def _recurrence(a: RatFunc, b: RatFunc, *initial: int) -> RecurrenceDef:
    return RecurrenceDef(a=a, b=b, initial_terms=tuple(initial))


def fuss_catalan(p: int) -> SequenceDef:
    """Fuss-Catalan numbers (pn)! / (((p-1)n + 1)! n!) as the Gamma-quotient family (0, 0, 1, p, 1, p - 1).

    Args:
        p: Order of the family, at least 2.

    Returns:
        Definition named "fuss-catalan-<p>".
    """
    if p < 2:
        raise errors.InvalidFamily("fuss-catalan requires p >= 2")
    return SequenceDef(
        name=f"{FUSS_CATALAN}-{p}",
        kind=GammaQuotientDef(n0=0, k0=0, k0bar=1, a=p, b=1, bbar=p - 1),
        oeis_id=_FUSS_CATALAN_OEIS.get(p),
        description=f"Fuss-Catalan numbers of order {p}",
    )


def builtin_sequences() -> list[SequenceDef]:
    """Every built-in sequence definition."""
    n = RatFunc.variable()
    cube = RatFunc.from_polys((1, 3, 3, 1))
    return [
        SequenceDef(
            name="derangement",
            kind=_recurrence(n, n, 1, 0),
            oeis_id="A000166",
            positive_from=2,
            description="Derangements d_{n+1} = n (d_n + d_{n-1})",
        ),
        SequenceDef(
            name="motzkin",
            kind=_recurrence(
                RatFunc.from_polys((3, 2), (3, 1)),
                RatFunc.from_polys((0, 3), (3, 1)),
                1,
                1,
            ),
            oeis_id="A001006",
            description="Motzkin numbers (n+3) M_{n+1} = (2n+3) M_n + 3n M_{n-1}",
        ),
        SequenceDef(
            name="fine",
            kind=_recurrence(
                RatFunc.from_polys((2, 7), (4, 2)),
                RatFunc.from_polys((1, 2), (2, 1)),
                1,
                0,
            ),
            oeis_id="A000957",
            oeis_shift=1,
            positive_from=2,
            description="Fine numbers 2(n+2) f_{n+1} = (7n+2) f_n + 2(2n+1) f_{n-1}",
        ),
        SequenceDef(
            name="franel",
            kind=_recurrence(
                RatFunc.from_polys((2, 7, 7), (1, 2, 1)),
                RatFunc.from_polys((0, 0, 8), (1, 2, 1)),
                1,
                2,
            ),
            oeis_id="A000172",
            description="Franel numbers (n+1)^2 F_{n+1} = (7n(n+1)+2) F_n + 8n^2 F_{n-1}",
        ),
        SequenceDef(
            name="domb",
            kind=_recurrence(
                RatFunc.from_polys((4, 18, 30, 20)) / cube,
                RatFunc.from_polys((0, 0, 0, -64)) / cube,
                1,
                4,
            ),
            oeis_id="A002895",
            description="Domb numbers (n+1)^3 D_{n+1} = 2(2n+1)(5n(n+1)+2) D_n - 64n^3 D_{n-1}",
        ),
        SequenceDef(
            name="catalan",
            kind=GammaQuotientDef(n0=0, k0=0, k0bar=1, a=2, b=1, bbar=1),
            oeis_id="A000108",
            description="Catalan numbers (2i)! / (i! (i+1)!)",
        ),
        SequenceDef(
            name="central-binomial",
            kind=GammaQuotientDef(n0=0, k0=0, k0bar=0, a=2, b=1, bbar=1),
            oeis_id="A000984",
            description="Central binomial coefficients (2i)! / (i!)^2",
        ),
        fuss_catalan(3),
    ]


class SequenceCatalog(collections.Collection):
    """Registry of named sequence definitions."""

    _collection: dict[str, SequenceDef] = {}
    _collection_lock = threading.RLock()
    _collection_uri = None

    collection_help = "sequences"
    entry_cls = SequenceDef

    @classmethod
    def missing_error(cls, key: str) -> errors.VerificationError:
        """Lookups of unregistered names raise UnknownSequence."""
        return errors.UnknownSequence(key)

    @classmethod
    def post_load(cls) -> None:
        """Register the built-in sequences, then any documents named by RATIOLOG_SEQUENCES."""
        with cls._collection_lock:
            if "derangement" in cls._collection:
                return
            for sequence in builtin_sequences():
                cls.register(sequence)
        if config_utils.SEQUENCES:
            cls.load(config_utils.SEQUENCES)


def catalog_lookup(name: str, p: int | None = None) -> SequenceDef:
    """Find a sequence by catalog name.

    Args:
        name: Catalog name. "fuss-catalan" requires p, and "fuss-catalan-<p>" is accepted directly.
        p: Order for the Fuss-Catalan family.

    Returns:
        Fully populated sequence definition.

    Raises:
        UnknownSequence if the name is not registered.
    """
    key = _ALIASES.get(name.strip().lower(), name.strip().lower())
    if key == FUSS_CATALAN:
        if p is None:
            raise errors.UnknownSequence(name)
        return fuss_catalan(p)
    match = _FUSS_CATALAN_PATTERN.match(key)
    if match:
        return fuss_catalan(int(match.group(1)))
    return SequenceCatalog.get(key)  # type: ignore[return-value]
