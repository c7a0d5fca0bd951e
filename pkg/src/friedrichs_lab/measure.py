"""Discrete measure spaces, sampled functions, and decreasing rearrangements.

A measure space is carried by a finite family of weighted atoms; functions are
value arrays aligned to the atoms.  The decreasing rearrangement of a sampled
function is a nonincreasing step profile on (0, total_mass), which is the
universal input to every norm evaluator and kernel operator in this package.
Refining the atoms is the user's control for approximating non-atomic spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

__all__ = [
    "MeasureError",
    "SampledMeasureSpace",
    "SampledFunction",
    "RearrangementProfile",
    "rearrange",
    "distribution",
    "profile_eval",
    "ahlfors_constant",
    "load_space",
    "dump_space",
    "load_profile",
    "dump_profile",
]

_MASS_RTOL = 1e-12


class MeasureError(ValueError):
    """Invalid measure-space, sampled-function, or profile data."""


def _as_float_array(x, name):
    a = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(a)):
        raise MeasureError(f"{name} contains non-finite entries")
    return a


@dataclass(frozen=True)
class SampledMeasureSpace:
    """Finite atomic carrier of a measure: weights >= 0, optional positions."""

    weights: np.ndarray
    positions: np.ndarray | None = None
    ids: tuple = ()
    total_mass: float = None  # type: ignore[assignment]

    def __post_init__(self):
        w = _as_float_array(self.weights, "weights")
        if w.ndim != 1 or w.size == 0:
            raise MeasureError("weights must be a nonempty 1-d array")
        if np.any(w < 0):
            raise MeasureError("weights must be nonnegative")
        object.__setattr__(self, "weights", w)
        if self.positions is not None:
            pos = _as_float_array(self.positions, "positions")
            if pos.ndim != 2 or pos.shape[0] != w.size:
                raise MeasureError("positions must be (n_atoms, dim)")
            object.__setattr__(self, "positions", pos)
        if self.ids:
            if len(self.ids) != w.size:
                raise MeasureError("ids length must match atom count")
            object.__setattr__(self, "ids", tuple(self.ids))
        mass = float(np.sum(w))
        if self.total_mass is None:
            object.__setattr__(self, "total_mass", mass)
        else:
            declared = float(self.total_mass)
            if abs(declared - mass) > _MASS_RTOL * max(abs(declared), abs(mass), 1e-300):
                raise MeasureError(
                    f"total_mass {declared!r} disagrees with weight sum {mass!r}"
                )
            object.__setattr__(self, "total_mass", declared)

    @property
    def n_atoms(self) -> int:
        return self.weights.size


@dataclass(frozen=True)
class SampledFunction:
    """Real values aligned to the atoms of a SampledMeasureSpace."""

    space: SampledMeasureSpace
    values: np.ndarray

    def __post_init__(self):
        v = _as_float_array(self.values, "values")
        if v.ndim != 1 or v.size != self.space.n_atoms:
            raise MeasureError("values length must equal atom count")
        object.__setattr__(self, "values", v)


@dataclass(frozen=True)
class RearrangementProfile:
    """Nonincreasing nonnegative step function on (0, domain_length).

    ``breaks`` has k+1 strictly increasing entries starting at 0; ``values``
    holds the k step values, values[i] on [breaks[i], breaks[i+1]).
    """

    breaks: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        b = _as_float_array(self.breaks, "breaks")
        v = _as_float_array(self.values, "values")
        if b.ndim != 1 or v.ndim != 1 or b.size != v.size + 1 or v.size == 0:
            raise MeasureError("profile needs k+1 breaks and k values, k >= 1")
        if b[0] != 0.0:
            raise MeasureError("profile breaks must start at 0")
        if not np.all(np.diff(b) > 0):
            raise MeasureError("profile breaks must be strictly increasing")
        if np.any(v < 0):
            raise MeasureError("profile values must be nonnegative")
        if np.any(np.diff(v) > 0):
            raise MeasureError("profile values must be nonincreasing")
        object.__setattr__(self, "breaks", b)
        object.__setattr__(self, "values", v)

    @property
    def domain_length(self) -> float:
        return float(self.breaks[-1])

    @cached_property
    def widths(self) -> np.ndarray:
        return np.diff(self.breaks)

    def eval(self, t):
        """Step value at t (0 beyond domain_length); vectorized."""
        t = np.asarray(t, dtype=float)
        if np.any(t < 0):
            raise MeasureError("profile argument must be nonnegative")
        idx = np.searchsorted(self.breaks, t, side="right") - 1
        out = np.where(idx < self.values.size, self.values[np.minimum(idx, self.values.size - 1)], 0.0)
        out = np.where(t >= self.breaks[-1], 0.0, out)
        return out if out.ndim else float(out)

    def scaled(self, c: float) -> "RearrangementProfile":
        if c < 0:
            raise MeasureError("profile scale factor must be nonnegative")
        return RearrangementProfile(self.breaks, self.values * c)

    def restricted(self, length: float) -> "RearrangementProfile":
        """Truncate to (0, length); pads with a zero step if length exceeds the domain."""
        if length <= 0:
            raise MeasureError("restriction length must be positive")
        b, v = self.breaks, self.values
        if length >= b[-1]:
            if length == b[-1]:
                return self
            return RearrangementProfile(np.append(b, length), np.append(v, 0.0))
        k = int(np.searchsorted(b, length, side="left"))
        return RearrangementProfile(np.append(b[:k], length), v[:k].copy())

    def to_sampled(self) -> SampledFunction:
        """View the profile itself as a sampled function (one atom per step)."""
        space = SampledMeasureSpace(weights=self.widths)
        return SampledFunction(space, self.values.copy())


def rearrange(f: SampledFunction) -> RearrangementProfile:
    """Decreasing rearrangement of |f| with respect to the atom weights.

    Equal values are merged into single steps; the profile always extends to
    the space's total mass (trailing zero step if needed).
    """
    vals = np.abs(f.values)
    w = f.space.weights
    keep = w > 0
    v = vals[keep]
    ww = w[keep]
    total = f.space.total_mass
    if v.size == 0:
        if total <= 0:
            raise MeasureError("cannot rearrange over a zero-mass space")
        return RearrangementProfile(np.array([0.0, total]), np.array([0.0]))
    order = np.argsort(-v, kind="stable")
    v = v[order]
    ww = ww[order]
    head = np.empty(v.size, dtype=bool)
    head[0] = True
    np.not_equal(v[1:], v[:-1], out=head[1:])
    group = np.cumsum(head) - 1
    gv = v[head]
    gw = np.bincount(group, weights=ww)
    breaks = np.concatenate(([0.0], np.cumsum(gw)))
    # land exactly on the declared mass; append a zero tail if atoms of zero
    # weight or zero value left a gap
    gap = total - breaks[-1]
    if gap > 1e-15 * max(total, 1.0):
        if gv[-1] == 0.0:
            breaks[-1] = total
        else:
            breaks = np.append(breaks, total)
            gv = np.append(gv, 0.0)
    else:
        breaks[-1] = max(breaks[-1], total)
    return RearrangementProfile(breaks, gv)


def distribution(f: SampledFunction, tau: float) -> float:
    """Measure of {|f| > tau}; the level-set oracle for rearrange."""
    if tau < 0:
        raise MeasureError("threshold must be nonnegative")
    mask = np.abs(f.values) > tau
    return float(np.sum(f.space.weights[mask]))


def profile_eval(p: RearrangementProfile, t: float) -> float:
    return p.eval(t)


def ahlfors_constant(mu: SampledMeasureSpace, alpha: float, centers, radii,
                     domain=None) -> float:
    """Sampled lower estimate of sup mu(B_r(x) ∩ Ω) / r^alpha.

    The estimate is monotone nondecreasing as the center/radius sets grow; it
    is a lower bound for the best Frostman constant, not a certified supremum.
    ``domain`` optionally restricts atoms to its interior.
    """
    if mu.positions is None:
        raise MeasureError("ahlfors_constant needs atom positions")
    centers = np.atleast_2d(np.asarray(centers, dtype=float))
    radii = np.sort(np.asarray(radii, dtype=float).ravel())
    if centers.size == 0 or radii.size == 0:
        raise MeasureError("centers and radii must be nonempty")
    if np.any(radii <= 0):
        raise MeasureError("radii must be positive")
    n = mu.positions.shape[1]
    if not (0 < alpha <= n):
        raise MeasureError(f"alpha must lie in (0, {n}] for {n}-d positions")
    pos = mu.positions
    w = mu.weights
    if domain is not None:
        inside = domain.contains(pos)
        pos, w = pos[inside], w[inside]
        if pos.size == 0:
            return 0.0
    best = 0.0
    ralpha = radii ** alpha
    for c in centers:
        d = np.sqrt(np.sum((pos - c) ** 2, axis=1))
        order = np.argsort(d, kind="stable")
        csum = np.cumsum(w[order])
        counts = np.searchsorted(d[order], radii, side="right")
        mass = np.where(counts > 0, csum[np.maximum(counts - 1, 0)], 0.0)
        best = max(best, float(np.max(mass / ralpha)))
    return best


# ---------------------------------------------------------------------------
# plain-text serialization

def dump_profile(p: RearrangementProfile, path) -> None:
    """CSV rows ``t_break,value``: right endpoint of each step and its value."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("t_break,value\n")
        for t, v in zip(p.breaks[1:], p.values):
            fh.write(f"{t!r},{v!r}\n")


def load_profile(path) -> RearrangementProfile:
    rights, values = [], []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or line.lower().startswith("t_break"):
                continue
            t, v = line.split(",")
            rights.append(float(t))
            values.append(float(v))
    if not rights:
        raise MeasureError(f"no profile rows in {path}")
    return RearrangementProfile(np.concatenate(([0.0], rights)), np.asarray(values))


def dump_space(space: SampledMeasureSpace, path) -> None:
    """One atom per line: ``id,weight[,x,y[,z]]``."""
    ids = space.ids or tuple(range(space.n_atoms))
    with open(path, "w", encoding="utf-8") as fh:
        for i, a in enumerate(ids):
            row = [str(a), repr(float(space.weights[i]))]
            if space.positions is not None:
                row.extend(repr(float(c)) for c in space.positions[i])
            fh.write(",".join(row) + "\n")


def load_space(path) -> SampledMeasureSpace:
    ids, weights, positions = [], [], []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if len(parts) < 2:
                raise MeasureError(f"atom line needs id,weight: {line!r}")
            ids.append(parts[0])
            weights.append(float(parts[1]))
            if len(parts) > 2:
                positions.append([float(x) for x in parts[2:]])
    if positions and len(positions) != len(weights):
        raise MeasureError("either all atoms carry positions or none")
    return SampledMeasureSpace(
        weights=np.asarray(weights),
        positions=np.asarray(positions) if positions else None,
        ids=tuple(ids),
    )
