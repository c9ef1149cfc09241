"""Verdicts returned by the bounded analyses.

Every verdict carries a qualification: ``EXACT`` answers are proofs (a
witness was constructed, or an exhaustive/algebraic argument rules the
alternative out); ``UP_TO_BOUND`` answers only hold for the explored fragment.
"""

from enum import Enum


class Verdict(Enum):
    TRUE_EXACT = ("TRUE_EXACT", True, "EXACT")
    TRUE_UP_TO_BOUND = ("TRUE_UP_TO_BOUND", True, "UP_TO_BOUND")
    FALSE_EXACT = ("FALSE_EXACT", False, "EXACT")
    COUNTEREXAMPLE_EXACT = ("COUNTEREXAMPLE_EXACT", False, "EXACT")
    COUNTEREXAMPLE_UP_TO_BOUND = ("COUNTEREXAMPLE_UP_TO_BOUND", False, "UP_TO_BOUND")
    CANDIDATE_COUNTEREXAMPLE = ("CANDIDATE_COUNTEREXAMPLE", False, "UP_TO_BOUND")
    YES = ("YES", True, "EXACT")
    NO_WITHIN_BOX = ("NO_WITHIN_BOX", False, "UP_TO_BOUND")
    SYMMETRIC_UP_TO_BOUND = ("SYMMETRIC_UP_TO_BOUND", True, "UP_TO_BOUND")
    ASYMMETRIC_EXACT = ("ASYMMETRIC_EXACT", False, "EXACT")
    ASYMMETRIC_UP_TO_BOUND = ("ASYMMETRIC_UP_TO_BOUND", False, "UP_TO_BOUND")
    IDENTICAL_UP_TO_BOUND = ("IDENTICAL_UP_TO_BOUND", True, "UP_TO_BOUND")
    DIFFERENT_UP_TO_BOUND = ("DIFFERENT_UP_TO_BOUND", False, "UP_TO_BOUND")

    def __init__(self, label, positive, qualification):
        self.label = label
        self.positive = positive
        self.qualification = qualification

    @property
    def exact(self) -> bool:
        return self.qualification == "EXACT"

    def __bool__(self) -> bool:
        return self.positive

    def __str__(self) -> str:
        if self.qualification in self.label:
            return self.label
        return f"{self.label} [{self.qualification}]"
