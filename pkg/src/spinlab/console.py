from rich.console import Console


class FallbackConsoleBuilder:
    """Builds the fallback console for diagnostics on standard error."""

    def build(self) -> Console:
        """Build the console."""

        return Console(stderr=True)
