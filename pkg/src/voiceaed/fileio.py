"""Binary containers: 16 kHz mono WAV clips and the "FAED" array cache format.

FAED layout (little-endian throughout):
    magic "FAED" | format version u32 | ndim u32 | dims u32 each |
    dtype code u8 (0 = f32) | payload, row-major
"""

import struct
import wave
from pathlib import Path

import numpy as np

from .errors import CacheFormatError, UnsupportedRateError

FAED_MAGIC = b"FAED"
FAED_VERSION = 1
DTYPE_F32 = 0

SAMPLE_RATE = 16000


def write_array(path, arr):
    """Write a float array to `path` as a FAED container (f32 payload)."""
    arr = np.ascontiguousarray(arr, dtype="<f4")
    header = FAED_MAGIC + struct.pack("<II", FAED_VERSION, arr.ndim)
    header += struct.pack(f"<{arr.ndim}I", *arr.shape)
    header += struct.pack("<B", DTYPE_F32)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(arr.tobytes())


def read_array(path):
    """Read a FAED container back into an f32 array."""
    path = Path(path)
    with open(path, "rb") as fh:
        blob = fh.read()
    if blob[:4] != FAED_MAGIC:
        raise CacheFormatError(f"{path}: bad magic {blob[:4]!r}")
    try:
        version, ndim = struct.unpack_from("<II", blob, 4)
        dims = struct.unpack_from(f"<{ndim}I", blob, 12)
        (code,) = struct.unpack_from("<B", blob, 12 + 4 * ndim)
    except struct.error as exc:
        raise CacheFormatError(f"{path}: truncated header") from exc
    if version != FAED_VERSION:
        raise CacheFormatError(f"{path}: unsupported format version {version}")
    if code != DTYPE_F32:
        raise CacheFormatError(f"{path}: unknown dtype code {code}")
    offset = 13 + 4 * ndim
    count = int(np.prod(dims, dtype=np.int64)) if dims else 1
    payload = blob[offset:]
    if len(payload) != 4 * count:
        raise CacheFormatError(
            f"{path}: payload holds {len(payload)} bytes, expected {4 * count}"
        )
    return np.frombuffer(payload, dtype="<f4").reshape(dims).copy()


def read_wav(path):
    """Read a mono 16-bit PCM WAV; returns (samples in [-1, 1], rate).

    Samples are scaled by 1/32768.
    """
    path = Path(path)
    with wave.open(str(path), "rb") as wav:
        if wav.getnchannels() != 1:
            raise CacheFormatError(f"{path}: expected mono, got {wav.getnchannels()} channels")
        if wav.getsampwidth() != 2:
            raise CacheFormatError(f"{path}: expected 16-bit PCM")
        rate = wav.getframerate()
        raw = wav.readframes(wav.getnframes())
    samples = np.frombuffer(raw, dtype="<i2").astype(np.float32) / 32768.0
    return samples, rate


def write_wav(path, samples, rate=SAMPLE_RATE):
    """Write float samples in [-1, 1] as a mono 16-bit PCM WAV."""
    if rate != SAMPLE_RATE:
        raise UnsupportedRateError(f"only {SAMPLE_RATE} Hz output supported, got {rate}")
    quantized = np.clip(np.asarray(samples) * 32768.0, -32768, 32767).astype("<i2")
    with wave.open(str(path), "wb") as wav:
        wav.setnchannels(1)
        wav.setsampwidth(2)
        wav.setframerate(rate)
        wav.writeframes(quantized.tobytes())
