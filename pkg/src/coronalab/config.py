"""Size caps for the exact solvers."""

from dataclasses import asdict, dataclass, replace

from .errors import SizeLimitError


@dataclass(frozen=True)
class Caps:
    """Largest vertex count each family of exact solvers accepts.

    ``coloring`` bounds chromatic and distance-k chromatic solves,
    ``subset`` the subset-search solvers (domination, location,
    independence, Roman value), ``partition`` the domatic and idomatic
    searches, and ``roman_enum`` the enumeration of every minimum-weight
    Roman function (needed for ``b2max``).
    """

    coloring: int = 64
    subset: int = 20
    partition: int = 14
    roman_enum: int = 14

    def to_dict(self):
        return asdict(self)

    def with_overrides(self, **kwargs):
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_CAPS = Caps()


def check_cap(what, n, cap):
    if n > cap:
        raise SizeLimitError(what, n, cap)
