"""Label-map file formats: 16-bit PGM (canonical), 16-bit grayscale PNG,
and CSV.

PGM is the canonical container (P5, maxval 65535, big-endian samples):
trivially parseable anywhere and wide enough for 65k superpixel labels.
The PNG path writes bit-depth-16 grayscale (color type 0) and reads bit
depths 8 and 16 with all five scanline filters.
"""

from __future__ import annotations

import struct
import zlib
from pathlib import Path

import numpy as np

from .core import LabelMap
from .errors import CorruptFile, LabelOverflow, UnsupportedFormat

MAX_LABEL = 65535


def _check_range(labels: np.ndarray):
    if labels.max() > MAX_LABEL:
        raise LabelOverflow(
            f"label {int(labels.max())} exceeds the 16-bit container maximum {MAX_LABEL}")
    if labels.min() < 0:
        raise LabelOverflow("negative labels cannot be saved")


# --- PGM -----------------------------------------------------------------

def _read_pgm_tokens(data: bytes, count: int) -> tuple[list[int], int]:
    """First `count` whitespace/comment-separated integer tokens after the
    magic; returns (tokens, offset past the single whitespace that ends
    the last token)."""
    tokens = []
    i = 2  # past "P5"
    while len(tokens) < count:
        if i >= len(data):
            raise CorruptFile("truncated PGM header")
        c = data[i:i + 1]
        if c == b"#":
            while i < len(data) and data[i:i + 1] not in (b"\n", b"\r"):
                i += 1
        elif c.isspace():
            i += 1
        else:
            j = i
            while j < len(data) and not data[j:j + 1].isspace() and data[j:j + 1] != b"#":
                j += 1
            try:
                tokens.append(int(data[i:j]))
            except ValueError as exc:
                raise CorruptFile(f"bad PGM header token {data[i:j]!r}") from exc
            i = j
    if i >= len(data) or not data[i:i + 1].isspace():
        raise CorruptFile("PGM header not terminated by whitespace")
    return tokens, i + 1


def read_pgm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    if data[:2] != b"P5":
        raise CorruptFile(f"{path}: not a binary PGM (P5) file")
    (width, height, maxval), offset = _read_pgm_tokens(data, 3)
    if width <= 0 or height <= 0 or not 0 < maxval < 65536:
        raise CorruptFile(f"{path}: bad PGM dimensions {width}x{height} maxval {maxval}")
    dtype = ">u2" if maxval > 255 else "u1"
    expect = width * height * (2 if maxval > 255 else 1)
    raw = data[offset:offset + expect]
    if len(raw) != expect:
        raise CorruptFile(f"{path}: expected {expect} sample bytes, found {len(raw)}")
    return np.frombuffer(raw, dtype=dtype).reshape(height, width).astype(np.int64)


def write_pgm(path, labels: np.ndarray):
    labels = np.asarray(labels)
    _check_range(labels)
    h, w = labels.shape
    header = f"P5\n{w} {h}\n{MAX_LABEL}\n".encode()
    Path(path).write_bytes(header + labels.astype(">u2").tobytes())


# --- PNG (grayscale) ------------------------------------------------------

_PNG_SIG = b"\x89PNG\r\n\x1a\n"


def _chunk(tag: bytes, payload: bytes) -> bytes:
    return (struct.pack(">I", len(payload)) + tag + payload
            + struct.pack(">I", zlib.crc32(tag + payload) & 0xFFFFFFFF))


def write_png_gray16(path, labels: np.ndarray):
    labels = np.asarray(labels)
    _check_range(labels)
    h, w = labels.shape
    ihdr = struct.pack(">IIBBBBB", w, h, 16, 0, 0, 0, 0)
    rows = labels.astype(">u2").tobytes()
    stride = 2 * w
    raw = b"".join(b"\x00" + rows[y * stride:(y + 1) * stride] for y in range(h))
    payload = zlib.compress(raw, 9)
    Path(path).write_bytes(_PNG_SIG + _chunk(b"IHDR", ihdr)
                           + _chunk(b"IDAT", payload) + _chunk(b"IEND", b""))


def _unfilter(raw: bytes, h: int, stride: int, bpp: int) -> bytearray:
    out = bytearray(h * stride)
    pos = 0
    for y in range(h):
        ftype = raw[pos]
        pos += 1
        line = bytearray(raw[pos:pos + stride])
        pos += stride
        prev = out[(y - 1) * stride:y * stride] if y else bytearray(stride)
        if ftype == 1:  # sub
            for i in range(bpp, stride):
                line[i] = (line[i] + line[i - bpp]) & 0xFF
        elif ftype == 2:  # up
            for i in range(stride):
                line[i] = (line[i] + prev[i]) & 0xFF
        elif ftype == 3:  # average
            for i in range(stride):
                a = line[i - bpp] if i >= bpp else 0
                line[i] = (line[i] + ((a + prev[i]) >> 1)) & 0xFF
        elif ftype == 4:  # paeth
            for i in range(stride):
                a = line[i - bpp] if i >= bpp else 0
                b = prev[i]
                c = prev[i - bpp] if i >= bpp else 0
                pa, pb, pc = abs(b - c), abs(a - c), abs(a + b - 2 * c)
                pred = a if (pa <= pb and pa <= pc) else (b if pb <= pc else c)
                line[i] = (line[i] + pred) & 0xFF
        elif ftype != 0:
            raise CorruptFile(f"unknown PNG filter type {ftype}")
        out[y * stride:(y + 1) * stride] = line
    return out


def read_png_gray(path) -> np.ndarray:
    data = Path(path).read_bytes()
    if data[:8] != _PNG_SIG:
        raise CorruptFile(f"{path}: not a PNG file")
    pos = 8
    ihdr = None
    idat = b""
    while pos + 8 <= len(data):
        (length,), tag = struct.unpack(">I", data[pos:pos + 4]), data[pos + 4:pos + 8]
        payload = data[pos + 8:pos + 8 + length]
        if len(payload) != length:
            raise CorruptFile(f"{path}: truncated PNG chunk {tag!r}")
        if tag == b"IHDR":
            ihdr = struct.unpack(">IIBBBBB", payload)
        elif tag == b"IDAT":
            idat += payload
        elif tag == b"IEND":
            break
        pos += 12 + length
    if ihdr is None or not idat:
        raise CorruptFile(f"{path}: missing IHDR or IDAT")
    w, h, depth, color, comp, filt, interlace = ihdr
    if color != 0 or depth not in (8, 16) or interlace:
        raise UnsupportedFormat(
            f"{path}: only non-interlaced 8/16-bit grayscale PNG is supported")
    bpp = depth // 8
    stride = bpp * w
    try:
        raw = zlib.decompress(idat)
    except zlib.error as exc:
        raise CorruptFile(f"{path}: bad PNG data ({exc})") from exc
    if len(raw) != h * (stride + 1):
        raise CorruptFile(f"{path}: PNG data has wrong length")
    flat = _unfilter(raw, h, stride, bpp)
    dtype = ">u2" if depth == 16 else "u1"
    return np.frombuffer(bytes(flat), dtype=dtype).reshape(h, w).astype(np.int64)


# --- CSV ------------------------------------------------------------------

def read_csv(path) -> np.ndarray:
    rows = []
    width = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                row = [int(tok) for tok in line.split(",")]
            except ValueError as exc:
                raise CorruptFile(f"{path}:{lineno}: non-integer cell") from exc
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise CorruptFile(f"{path}:{lineno}: ragged row "
                                  f"({len(row)} cells, expected {width})")
            rows.append(row)
    if not rows:
        raise CorruptFile(f"{path}: empty CSV")
    return np.array(rows, dtype=np.int64)


def write_csv(path, labels: np.ndarray):
    labels = np.asarray(labels)
    with open(path, "w", encoding="utf-8") as fh:
        for row in labels:
            fh.write(",".join(str(int(v)) for v in row))
            fh.write("\n")


# --- dispatch -------------------------------------------------------------

_FORMATS = {"pgm16": (read_pgm, write_pgm),
            "png_gray16": (read_png_gray, write_png_gray16),
            "csv": (read_csv, write_csv)}


def sniff_format(path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".pgm":
        return "pgm16"
    if suffix == ".png":
        return "png_gray16"
    if suffix == ".csv":
        return "csv"
    raise UnsupportedFormat(f"cannot infer label-map format from {path!r} "
                            f"(use .pgm, .png, or .csv)")


def load_label_map(path, fmt: str | None = None) -> LabelMap:
    fmt = fmt or sniff_format(path)
    if fmt not in _FORMATS:
        raise UnsupportedFormat(f"unknown format {fmt!r}")
    return LabelMap(_FORMATS[fmt][0](path))


def save_label_map(path, label_map: LabelMap, fmt: str | None = None):
    fmt = fmt or sniff_format(path)
    if fmt not in _FORMATS:
        raise UnsupportedFormat(f"unknown format {fmt!r}")
    _FORMATS[fmt][1](path, label_map.labels)
