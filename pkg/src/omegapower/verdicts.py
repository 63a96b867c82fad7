"""Three-valued verdicts for omega-language membership queries.

Deciders that search under a budget return Member.YES / Member.NO when a
certificate (or a sound refutation) was found and Member.INCONCLUSIVE when
the budget ran out first.  The enum deliberately has no truth value: callers
must compare explicitly.
"""

import enum


class Member(enum.Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"

    @staticmethod
    def of(flag: bool) -> "Member":
        return Member.YES if flag else Member.NO


class _Undetermined:
    """Sentinel returned by erase_lasso when its cycle budget runs out."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Undetermined"


UNDETERMINED = _Undetermined()
