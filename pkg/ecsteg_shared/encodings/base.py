import logging

logger = logging.getLogger(__name__)

SLOT_COUNT = 4


class EncodingNotApplicableError(ValueError):
    pass


class PreimageSlots(object):
    """Exactly four candidate preimages; None marks an empty slot."""

    __slots__ = ("_slots",)

    def __init__(self, slots=()):
        slots = list(slots)
        if len(slots) > SLOT_COUNT:
            raise ValueError(
                "At most {} preimage slots, got {}".format(SLOT_COUNT, len(slots))
            )
        self._slots = tuple(slots + [None] * (SLOT_COUNT - len(slots)))

    @classmethod
    def empty(cls):
        return cls()

    def __getitem__(self, index):
        return self._slots[index]

    def __iter__(self):
        return iter(self._slots)

    def __len__(self):
        return SLOT_COUNT

    def values(self):
        """The non-empty slots in slot order."""
        return [u for u in self._slots if u is not None]

    def count(self):
        return len(self.values())

    def __eq__(self, other):
        if not isinstance(other, PreimageSlots):
            return NotImplemented
        return self._slots == other._slots

    def __repr__(self):
        return "PreimageSlots({})".format(
            ", ".join("-" if u is None else str(u.residue) for u in self._slots)
        )


class Encoding(object):
    """A map f: F_p -> E(F_p) with a sampleable inverse.

    Subclasses implement ``_forward`` and ``_candidates``; every inverse
    candidate is re-checked by forward evaluation before it lands in a slot.
    """

    name = None

    def __init__(self, curve):
        reason = self.not_applicable_reason(curve)
        if reason:
            raise EncodingNotApplicableError(
                "{} encoding does not apply to {}: {}".format(
                    self.name, curve.name, reason
                )
            )
        self._curve = curve

    @classmethod
    def not_applicable_reason(cls, curve):
        raise NotImplementedError

    @classmethod
    def applies_to(cls, curve):
        return not cls.not_applicable_reason(curve)

    @property
    def curve(self):
        return self._curve

    def forward(self, u):
        raise NotImplementedError

    def inverse(self, point, rng=None):
        raise NotImplementedError

    def _verified_slots(self, point, candidates):
        """Keep candidates that map back to point, positionally, without repeats."""
        slots = []
        seen = set()
        for u in candidates:
            if u is None or u in seen or self.forward(u) != point:
                slots.append(None)
                continue
            seen.add(u)
            slots.append(u)
        return PreimageSlots(slots)

    def __repr__(self):
        return "{}({})".format(type(self).__name__, self._curve.name)
