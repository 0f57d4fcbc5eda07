"""Exception types shared across the package."""


class VoiceAedError(Exception):
    """Base class for all package errors."""


class UnsupportedRateError(VoiceAedError):
    """Input audio is not sampled at the fixed 16 kHz rate (no resampling)."""


class DegenerateStatsError(VoiceAedError):
    """A mel dimension has zero variance over the normalization set."""


class DegenerateBatchError(VoiceAedError):
    """Batch statistics requested over fewer than two samples per channel."""


class ShapeMismatchError(VoiceAedError):
    """Tensor shapes inconsistent with a layer or model spec."""


class CacheFormatError(VoiceAedError):
    """Malformed feature/embedding cache or checkpoint container."""


class ManifestError(VoiceAedError):
    """Invalid clip record or corrupt manifest file."""


class PrerequisiteError(VoiceAedError):
    """A pipeline stage was invoked before the artifacts it needs exist."""


class NonFiniteLossError(VoiceAedError):
    """Training produced a non-finite loss; carries the offending batch ids."""

    def __init__(self, message, batch_ids=()):
        super().__init__(message)
        self.batch_ids = list(batch_ids)
