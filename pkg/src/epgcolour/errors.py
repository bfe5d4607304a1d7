class EpgError(Exception):
    """Base class for errors raised by this package."""


class DescriptorError(EpgError, ValueError):
    """A group descriptor or input file could not be parsed."""


class InvalidGroupError(EpgError, ValueError):
    """Input data does not describe a group (failed Cayley-table checks)."""


class CapExceeded(EpgError, RuntimeError):
    """A configured size cap would be exceeded."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap
