class InputFileError(ValueError):
    """Raised when an input document cannot be read. The message names the file and the offending field or
    line/column."""
    def __init__(self, file_name, detail):
        super().__init__('{}: {}'.format(file_name, detail))
        self.file_name = file_name
        self.detail = detail


class StrategyLimitError(RuntimeError):
    """Raised when a classical enumeration would exceed the configured strategy cap."""
    def __init__(self, requested, cap):
        super().__init__('Enumeration of {:d} strategies exceeds the cap of {:d}; refusing to truncate.'
                         .format(requested, cap))
        self.requested = requested
        self.cap = cap
