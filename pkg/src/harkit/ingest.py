"""Labeled six-axis IMU recordings: CSV parsing, serialization, decimation.

Recording CSV format (UTF-8, LF or CRLF, one header line):

    t_s,ax_g,ay_g,az_g,gx_dps,gy_dps,gz_dps,label

The label column is optional; without it the recording is unlabeled.
Numeric fields are decimal with optional scientific notation and are
serialized at 9 significant digits.

Decimation bridges a high acquisition rate (e.g. 7.68 kHz) down to the
classifier rate (e.g. 240 Hz) by block averaging: each output sample is the
arithmetic mean of one contiguous block of `factor` input samples, which
acts as a box anti-alias filter. Block labels are decided by majority vote
with ties going to the earliest label in the block.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import CsvParseError, ValidationError

CSV_COLUMNS = ("t_s", "ax_g", "ay_g", "az_g", "gx_dps", "gy_dps", "gz_dps")
LABEL_COLUMN = "label"

# Nominal rate assigned when a recording is too short to measure one.
DEGENERATE_RATE_HZ = 1.0


@dataclass(frozen=True, slots=True)
class SampleFrame:
    """One timestamped six-axis sample: acceleration in g, angular rate in dps."""

    t: float
    ax: float
    ay: float
    az: float
    gx: float
    gy: float
    gz: float
    label: str | None = None

    def channels(self) -> tuple[float, float, float, float, float, float]:
        return (self.ax, self.ay, self.az, self.gx, self.gy, self.gz)


@dataclass
class Recording:
    """Ordered samples plus the nominal rate and the configured class set."""

    frames: list[SampleFrame]
    rate_hz: float
    class_set: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.frames)

    def to_matrix(self) -> np.ndarray:
        """(n, 6) float64 channel matrix in ax, ay, az, gx, gy, gz order."""
        out = np.empty((len(self.frames), 6), dtype=np.float64)
        for i, f in enumerate(self.frames):
            out[i, 0] = f.ax
            out[i, 1] = f.ay
            out[i, 2] = f.az
            out[i, 3] = f.gx
            out[i, 4] = f.gy
            out[i, 5] = f.gz
        return out

    def times(self) -> np.ndarray:
        return np.array([f.t for f in self.frames], dtype=np.float64)

    def labels(self) -> list[str | None]:
        return [f.label for f in self.frames]

    def is_labeled(self) -> bool:
        return any(f.label is not None for f in self.frames)

    def validate(self) -> None:
        """Check structural invariants; raises ValidationError on the first breach."""
        if not self.frames:
            raise ValidationError("recording has no frames")
        if not self.rate_hz > 0:
            raise ValidationError(f"rate_hz must be positive, got {self.rate_hz}")
        last_t = -math.inf
        for i, f in enumerate(self.frames):
            if f.t < 0:
                raise ValidationError(f"frame {i}: negative timestamp {f.t}")
            if f.t <= last_t:
                raise ValidationError(f"frame {i}: timestamp {f.t} not strictly increasing")
            last_t = f.t
            if not all(math.isfinite(v) for v in f.channels()):
                raise ValidationError(f"frame {i}: non-finite channel value")
            if f.label is not None and f.label not in self.class_set:
                raise ValidationError(f"frame {i}: unknown label {f.label!r}")
        if len(self.frames) >= 2:
            spacing = float(np.median(np.diff(self.times())))
            if abs(spacing * self.rate_hz - 1.0) > 0.01:
                raise ValidationError(
                    f"median spacing {spacing:.6g} s inconsistent with rate {self.rate_hz:.6g} Hz"
                )


@dataclass(frozen=True)
class DecimationSpec:
    """Integer-ratio rate reduction; input rate must be an exact multiple of output."""

    input_rate_hz: float
    output_rate_hz: float
    factor: int = field(init=False)

    def __post_init__(self) -> None:
        if self.input_rate_hz <= 0 or self.output_rate_hz <= 0:
            raise ValidationError("decimation rates must be positive")
        ratio = self.input_rate_hz / self.output_rate_hz
        factor = round(ratio)
        if factor < 1 or abs(ratio - factor) > 1e-9 * ratio:
            raise ValidationError(
                f"input rate {self.input_rate_hz} is not an integer multiple of {self.output_rate_hz}"
            )
        object.__setattr__(self, "factor", int(factor))


def _rates_match(actual: float, nominal: float) -> bool:
    return abs(actual - nominal) <= 0.01 * nominal


def parse_csv(source: str | Iterable[str], class_set: Sequence[str]) -> Recording:
    """Parse a recording from CSV text (a string or an iterable of lines).

    The nominal rate is inferred as the reciprocal of the median inter-frame
    spacing, which tolerates isolated timestamp jitter. Raises CsvParseError
    for malformed rows (with the 1-based physical line number) and
    ValidationError for contract breaches (non-monotonic time, unknown label,
    non-finite values).
    """
    if not class_set:
        raise ValidationError("class_set must not be empty")
    classes = tuple(class_set)
    if isinstance(source, str):
        lines: Iterable[str] = io.StringIO(source)
    else:
        lines = source

    frames: list[SampleFrame] = []
    has_label_col: bool | None = None
    last_t = -math.inf
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if lineno == 1:
            header = tuple(line.split(","))
            if header == CSV_COLUMNS:
                has_label_col = False
            elif header == CSV_COLUMNS + (LABEL_COLUMN,):
                has_label_col = True
            else:
                raise CsvParseError(f"unexpected header {line!r}", line=1)
            continue
        if not line:
            continue
        fields = line.split(",")
        expected = 8 if has_label_col else 7
        if len(fields) != expected:
            raise CsvParseError(f"expected {expected} fields, got {len(fields)}", line=lineno)
        try:
            values = [float(v) for v in fields[:7]]
        except ValueError as exc:
            raise CsvParseError(f"non-numeric field: {exc}", line=lineno) from None
        if not all(math.isfinite(v) for v in values):
            raise ValidationError(f"line {lineno}: non-finite value")
        t = values[0]
        if t < 0:
            raise ValidationError(f"line {lineno}: negative timestamp {t}")
        if t <= last_t:
            raise ValidationError(f"line {lineno}: timestamp {t} not strictly increasing")
        last_t = t
        label: str | None = None
        if has_label_col:
            label = fields[7]
            if label == "":
                label = None
            elif label not in classes:
                raise ValidationError(f"line {lineno}: unknown label {label!r}")
        frames.append(SampleFrame(t, *values[1:7], label=label))

    if has_label_col is None:
        raise CsvParseError("empty input, expected a header line", line=1)
    if not frames:
        raise ValidationError("recording has no data rows")

    if len(frames) >= 2:
        spacings = np.diff([f.t for f in frames])
        rate_hz = 1.0 / float(np.median(spacings))
    else:
        rate_hz = DEGENERATE_RATE_HZ
    return Recording(frames=frames, rate_hz=rate_hz, class_set=classes)


def format_float(x: float) -> str:
    """Canonical 9-significant-digit form used in all recording CSVs."""
    return f"{x:.9g}"


def recording_to_csv(rec: Recording) -> str:
    """Serialize to the canonical CSV; labeled recordings get the label column."""
    labeled = rec.is_labeled()
    header = ",".join(CSV_COLUMNS + ((LABEL_COLUMN,) if labeled else ()))
    rows = [header]
    for f in rec.frames:
        cells = [format_float(v) for v in (f.t, *f.channels())]
        if labeled:
            cells.append(f.label if f.label is not None else "")
        rows.append(",".join(cells))
    return "\n".join(rows) + "\n"


def _majority_label(labels: Sequence[str | None]) -> str | None:
    """Most frequent label; ties go to the label occurring earliest in the block."""
    counts: dict[str | None, int] = {}
    for lab in labels:
        counts[lab] = counts.get(lab, 0) + 1
    best = None
    best_count = -1
    for lab in labels:  # iteration order gives the earliest-occurrence tie-break
        c = counts[lab]
        if c > best_count:
            best, best_count = lab, c
    return best


def decimate(rec: Recording, spec: DecimationSpec) -> Recording:
    """Reduce rate by block averaging; see the module docstring for the rules.

    Output timestamps are the first timestamp of each block; output length is
    floor(len(rec) / factor).
    """
    if not _rates_match(rec.rate_hz, spec.input_rate_hz):
        raise ValidationError(
            f"recording rate {rec.rate_hz:.6g} Hz does not match decimation input rate "
            f"{spec.input_rate_hz:.6g} Hz"
        )
    factor = spec.factor
    if len(rec.frames) < factor:
        raise ValidationError(f"recording has {len(rec.frames)} frames, need at least {factor}")

    means = kernels.block_average(np.ascontiguousarray(rec.to_matrix()), factor)
    labels = rec.labels()
    out_frames: list[SampleFrame] = []
    for b in range(means.shape[0]):
        start = b * factor
        out_frames.append(
            SampleFrame(
                t=rec.frames[start].t,
                ax=float(means[b, 0]),
                ay=float(means[b, 1]),
                az=float(means[b, 2]),
                gx=float(means[b, 3]),
                gy=float(means[b, 4]),
                gz=float(means[b, 5]),
                label=_majority_label(labels[start : start + factor]),
            )
        )
    return Recording(frames=out_frames, rate_hz=spec.output_rate_hz, class_set=rec.class_set)
