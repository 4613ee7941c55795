"""Point clouds with exact coordinates, and their readers (CSV, PGM)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from ..errors import FormatError, InputError, ParseError

METRICS = ("linf", "l1", "l2")


def _as_number(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise InputError(f"coordinate {x!r} is not an integer or a fraction")


@dataclass(frozen=True)
class PointCloud:
    """Points with integer or rational coordinates of one fixed dimension.

    ``l2`` compares squared distances so everything stays exact;
    :meth:`measure` returns the squared value in that case.
    ``values`` optionally carries a per-point intensity (pixel value).
    """

    points: tuple[tuple[Fraction, ...], ...]
    metric: str = "linf"
    values: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        pts = tuple(tuple(_as_number(c) for c in p) for p in self.points)
        if len({len(p) for p in pts}) > 1:
            raise InputError("all points must have the same dimension")
        if self.metric not in METRICS:
            raise InputError(f"unknown metric {self.metric!r}; choose from {', '.join(METRICS)}")
        if self.values is not None and len(self.values) != len(pts):
            raise InputError("one value per point is required")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    @property
    def dimension(self) -> int:
        return len(self.points[0]) if self.points else 0

    def measure(self, i: int, j: int) -> Fraction:
        diffs = [abs(a - b) for a, b in zip(self.points[i], self.points[j])]
        if self.metric == "linf":
            return max(diffs, default=Fraction(0))
        if self.metric == "l1":
            return sum(diffs, Fraction(0))
        return sum((d * d for d in diffs), Fraction(0))

    def within(self, i: int, j: int, eps) -> bool:
        eps = Fraction(eps)
        bound = eps * eps if self.metric == "l2" else eps
        return self.measure(i, j) <= bound

    def with_metric(self, metric: str) -> "PointCloud":
        return PointCloud(self.points, metric, self.values)


def _fraction(token: str) -> Fraction:
    token = token.strip()
    if "/" in token:
        num, den = token.split("/", 1)
        value = Fraction(int(num), int(den))
    else:
        value = Fraction(int(token))
    return value


def _is_header(body: str) -> bool:
    for token in body.split(","):
        try:
            _fraction(token)
            return False
        except (ValueError, ZeroDivisionError):
            pass
    return True


def parse_csv(text: str, metric: str = "linf") -> PointCloud:
    """One point per line; a first line with no numeric field is a header."""
    points = []
    offset = 0
    seen_row = False
    for lineno, line in enumerate(text.splitlines(keepends=True), start=1):
        body = line.split("#", 1)[0].strip()
        if body and not seen_row and _is_header(body):
            seen_row = True
        elif body:
            seen_row = True
            coords = []
            col = offset
            for token in body.split(","):
                try:
                    coords.append(_fraction(token))
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"bad coordinate {token.strip()!r}", lineno, col) from None
                col += len(token.encode()) + 1
            if points and len(coords) != len(points[0]):
                raise ParseError(f"expected {len(points[0])} coordinates, got {len(coords)}",
                                 lineno, offset)
            points.append(tuple(coords))
        offset += len(line.encode())
    return PointCloud(tuple(points), metric)


@dataclass(frozen=True)
class GrayImage:
    width: int
    height: int
    maxval: int
    pixels: tuple[tuple[int, ...], ...]  # pixels[row][col]

    def to_pgm(self, raw: bool = True) -> bytes:
        header = f"{'P5' if raw else 'P2'}\n{self.width} {self.height}\n{self.maxval}\n".encode()
        if not raw:
            return header + "".join(" ".join(map(str, r)) + "\n" for r in self.pixels).encode()
        size = 1 if self.maxval < 256 else 2
        return header + b"".join(v.to_bytes(size, "big") for r in self.pixels for v in r)

    def downscale(self, factor: int = 2) -> "GrayImage":
        """Block maximum over factor x factor tiles (partial tiles at the border kept)."""
        h = -(-self.height // factor)
        w = -(-self.width // factor)
        rows = tuple(tuple(max(self.pixels[r][c]
                               for r in range(br * factor, min(self.height, br * factor + factor))
                               for c in range(bc * factor, min(self.width, bc * factor + factor)))
                           for bc in range(w)) for br in range(h))
        return GrayImage(w, h, self.maxval, rows)


def _header_tokens(data: bytes, count: int):
    """The first ``count`` whitespace-separated header tokens, skipping comments;
    returns the tokens (with byte offsets) and the offset just after the last one."""
    tokens, i, n = [], 0, len(data)
    while len(tokens) < count:
        while i < n and data[i:i + 1].isspace():
            i += 1
        if i < n and data[i:i + 1] == b"#":
            while i < n and data[i:i + 1] not in (b"\n", b"\r"):
                i += 1
            continue
        if i >= n:
            raise ParseError("truncated header", offset=i)
        start = i
        while i < n and not data[i:i + 1].isspace() and data[i:i + 1] != b"#":
            i += 1
        tokens.append((data[start:i], start))
    return tokens, i


def _line_of(data: bytes, offset: int) -> int:
    return data.count(b"\n", 0, offset) + 1


def parse_pgm(data: bytes) -> GrayImage:
    if data[:2] not in (b"P2", b"P5"):
        raise FormatError(f"unsupported magic number {data[:2]!r}; expected P2 or P5")
    tokens, end = _header_tokens(data, 4)
    values = []
    for tok, pos in tokens[1:]:
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"bad header field {tok!r}", _line_of(data, pos), pos) from None
    width, height, maxval = values
    if width < 0 or height < 0 or not 0 < maxval < 65536:
        raise ParseError("header values out of range", _line_of(data, tokens[3][1]), tokens[3][1])
    count = width * height
    if data[:2] == b"P5":
        start = end + 1
        size = 1 if maxval < 256 else 2
        raster = data[start:start + count * size]
        if len(raster) < count * size:
            raise ParseError(f"raster has {len(raster)} bytes, expected {count * size}",
                             offset=start + len(raster))
        samples = [int.from_bytes(raster[k * size:(k + 1) * size], "big") for k in range(count)]
        positions = [start + k * size for k in range(count)]
    else:
        samples, positions = [], []
        i, n = end, len(data)
        while len(samples) < count:
            while i < n and data[i:i + 1].isspace():
                i += 1
            if i < n and data[i:i + 1] == b"#":
                while i < n and data[i:i + 1] != b"\n":
                    i += 1
                continue
            if i >= n:
                raise ParseError(f"raster has {len(samples)} samples, expected {count}",
                                 _line_of(data, i), i)
            start = i
            while i < n and not data[i:i + 1].isspace():
                i += 1
            try:
                samples.append(int(data[start:i]))
            except ValueError:
                raise ParseError(f"bad sample {data[start:i]!r}", _line_of(data, start),
                                 start) from None
            positions.append(start)
    for v, pos in zip(samples, positions):
        if v > maxval:
            raise ParseError(f"sample {v} exceeds maxval {maxval}", _line_of(data, pos), pos)
    rows = tuple(tuple(samples[r * width:(r + 1) * width]) for r in range(height))
    return GrayImage(width, height, maxval, rows)


def image_points(image: GrayImage, threshold: int | None = None,
                 metric: str = "linf") -> PointCloud:
    """Pixels with value >= threshold become points (col, row), in row-major order.

    The default threshold is half of maxval, rounded up.
    """
    if threshold is None:
        threshold = (image.maxval + 1) // 2
    pts, vals = [], []
    for r, row in enumerate(image.pixels):
        for c, v in enumerate(row):
            if v >= threshold:
                pts.append((c, r))
                vals.append(v)
    return PointCloud(tuple(pts), metric, tuple(vals))


def load_points(path, fmt: str | None = None, threshold: int | None = None,
                metric: str = "linf") -> PointCloud:
    path = Path(path)
    fmt = fmt or path.suffix.lstrip(".").lower()
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "csv":
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not UTF-8", offset=exc.start) from None
        return parse_csv(text, metric)
    if fmt in ("pgm", "pnm"):
        return image_points(parse_pgm(data), threshold, metric)
    raise FormatError(f"unknown point format {fmt!r}; use csv or pgm")


def load_image(path) -> GrayImage:
    try:
        return parse_pgm(Path(path).read_bytes())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


STEPS = ("coordinatewise", "intensity", "pairs")


@dataclass(frozen=True)
class StepMetricSpace:
    """A point cloud with a reflexive step relation used for directed structure."""

    cloud: PointCloud
    step: str = "coordinatewise"
    pairs: frozenset = frozenset()

    def __post_init__(self):
        if self.step not in STEPS:
            raise InputError(f"unknown step {self.step!r}; choose from {', '.join(STEPS)}")
        if self.step == "intensity" and self.cloud.values is None:
            raise InputError("the intensity step needs per-point values")
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))

    def precedes(self, i: int, j: int) -> bool:
        if i == j:
            return True
        if self.step == "coordinatewise":
            return all(a <= b for a, b in zip(self.cloud.points[i], self.cloud.points[j]))
        if self.step == "intensity":
            return self.cloud.values[i] <= self.cloud.values[j]
        return (i, j) in self.pairs


def cloud_from(points: Sequence[Sequence], metric: str = "linf") -> PointCloud:
    return PointCloud(tuple(tuple(p) for p in points), metric)
