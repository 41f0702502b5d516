"""Exception types shared across the package.

File-not-found conditions use the builtin FileNotFoundError and plain I/O
failures use the builtin OSError; everything with domain meaning gets its
own class so callers can catch precisely.
"""


class HogFusionError(Exception):
    """Base class for all errors raised by this package."""


# --- image decoding / geometry ---

class UnsupportedFormat(HogFusionError):
    """File decodes to something other than PNG or JPEG."""


class CorruptImage(HogFusionError):
    """File cannot be decoded as an image at all."""


class ZeroDimension(HogFusionError):
    """Requested output width or height is < 1."""


class ImageTooSmall(HogFusionError):
    """Image too small for the requested descriptor geometry."""


class GridTooSmall(HogFusionError):
    """Cell grid smaller than one block."""


# --- tensor engine ---

class ShapeMismatch(HogFusionError):
    """Operand shapes are incompatible."""


class InputTooSmall(HogFusionError):
    """Spatial extent too small for the kernel or pooling window."""


class NonFiniteInput(HogFusionError):
    """Input contains NaN or infinity where finite values are required."""


class InvalidRate(HogFusionError):
    """Dropout rate outside [0, 1)."""


class UnknownParameter(HogFusionError):
    """Gradient supplied for a parameter name that does not exist."""


class InvalidConfig(HogFusionError):
    """Model or training configuration violates its invariants."""


# --- datasets / manifests ---

class ParseError(HogFusionError):
    """Malformed manifest or feature file row."""


class DuplicateId(HogFusionError):
    """Sample id appears more than once."""


class MissingColumn(HogFusionError):
    """Required CSV column absent from the header."""


class LabelOutOfRange(HogFusionError):
    """Class label outside the expected range."""


class ClassTooSmall(HogFusionError):
    """A class has too few samples for the requested split or fold count."""


# --- metrics ---

class LengthMismatch(HogFusionError):
    """Paired label vectors differ in length."""


class EmptyMatrix(HogFusionError):
    """Confusion matrix holds zero samples."""


class SingleClassInput(HogFusionError):
    """AUC requested but only one class is present."""


# --- training / serialization ---

class EmptyDataset(HogFusionError):
    """Training or evaluation invoked with no samples."""


class FeatureMismatch(HogFusionError):
    """Descriptor length differs from the model's configured input width."""


class MissingSample(HogFusionError):
    """Requested sample id absent from a feature store."""


class CorruptFile(HogFusionError):
    """Checkpoint or feature file fails structural validation."""


class VersionMismatch(HogFusionError):
    """Checkpoint metadata incompatible with the requested configuration."""
