"""
Index reports. The limit r -> 1 can't be sampled, so an index is only
reported once the two largest circles agree on the winding number and
neither comes close to zero.
"""

from dataclasses import dataclass, field, replace

from src.utils.general import json_float, json_floats

FLAG_NOT_INVERTIBLE = 'not-invertible'
FLAG_INDEX_UNSTABLE = 'index-unstable'
FLAG_NONZERO_INDEX = 'nonzero-index'
FLAG_EVALUATION_FAILED = 'evaluation-failed'


@dataclass(frozen=True)
class WindingReport(object):
    """
    Per-radius winding numbers and the verdict drawn from them.

    :attr tuple radii: Circle radii, increasing.
    :attr tuple windings: Winding per radius, ``None`` where undefined.
    :attr tuple min_mods: Smallest modulus per radius (nan if unknown).
    :attr tuple max_mods: Largest modulus per radius (nan if unknown).
    :attr bool stabilized: The two largest radii agree and are clean.
    :attr int index: The stabilized winding, else ``None``.
    :attr bool invertible: Clean at the largest radius.
    :attr tuple flags: Why the pair condition fails, if it does.
    :attr float axis_min_mod: Infimum of the modulus on the imaginary axis,
        when it was searched for.
    """

    radii: tuple
    windings: tuple
    min_mods: tuple
    max_mods: tuple
    stabilized: bool
    index: int
    invertible: bool
    flags: tuple = field(default_factory=tuple)
    axis_min_mod: float = None

    @property
    def holds(self):
        """
        Invertible with index 0: the condition under which the distance
        between two plants is their chordal distance.

        :rtype: bool
        """

        return self.invertible and self.stabilized and self.index == 0

    @property
    def failed_condition(self):
        """
        :rtype: str or None
        :returns: The first reason the condition fails.
        """

        if self.holds:
            return None
        for flag in (FLAG_EVALUATION_FAILED, FLAG_NOT_INVERTIBLE,
                     FLAG_INDEX_UNSTABLE, FLAG_NONZERO_INDEX):
            if flag in self.flags:
                return flag
        return FLAG_INDEX_UNSTABLE

    def to_json(self):
        """
        :rtype: dict
        """

        data = {
            'radii': list(self.radii),
            'windings': list(self.windings),
            'min_mods': json_floats(self.min_mods),
            'stabilized': self.stabilized,
            'index': self.index,
            'invertible': self.invertible,
        }
        if self.axis_min_mod is not None:
            data['axis_min_mod'] = json_float(self.axis_min_mod)
        return data

    def with_axis_floor(self, floor, tolerance):
        """
        The same report, once the modulus on the axis itself is known. An
        axis infimum at or below the tolerance makes the function
        non-invertible whatever the circles say.

        :param float floor: Infimum of the modulus over the axis grid.
        :param float tolerance: The bar it must clear.
        :rtype: WindingReport
        """

        if floor > tolerance:
            return replace(self, axis_min_mod=floor)
        flags = list(self.flags)
        for flag in (FLAG_NOT_INVERTIBLE, FLAG_INDEX_UNSTABLE):
            if flag not in flags:
                flags.append(flag)
        return replace(self, invertible=False, stabilized=False, index=None,
                       flags=tuple(flags), axis_min_mod=floor)


def summarize(rows, tolerance_for):
    """
    Builds a report from per-radius rows.

    :param list rows: ``(radius, winding, min_mod, max_mod)`` tuples,
        winding ``None`` where undefined and min_mod nan where the circle
        couldn't be evaluated.
    :param tolerance_for: max_mod -> invertibility tolerance.
    :rtype: WindingReport
    """

    radii = tuple(row[0] for row in rows)
    windings = tuple(row[1] for row in rows)
    min_mods = tuple(float(row[2]) for row in rows)
    max_mods = tuple(float(row[3]) for row in rows)

    def clean(i):
        return windings[i] is not None and min_mods[i] > tolerance_for(max_mods[i])

    flags = []
    if any(m != m for m in min_mods):
        flags.append(FLAG_EVALUATION_FAILED)

    invertible = clean(-1)
    tail = range(max(len(rows) - 2, 0), len(rows))
    stabilized = (all(clean(i) for i in tail)
                  and len(set(windings[i] for i in tail)) == 1)
    index = windings[-1] if stabilized else None

    if not invertible:
        flags.append(FLAG_NOT_INVERTIBLE)
    if not stabilized:
        flags.append(FLAG_INDEX_UNSTABLE)
    elif index != 0:
        flags.append(FLAG_NONZERO_INDEX)
    return WindingReport(radii, windings, min_mods, max_mods, stabilized,
                         index, invertible, tuple(flags))
