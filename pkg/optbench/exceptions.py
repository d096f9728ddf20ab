from typing import List, Optional


class OptbenchException(Exception):
    def pretty_print_str(self):
        err = f"[bold][red]OptbenchException: {str(self)}[/red][/bold]"
        return err


class UnknownFunction(OptbenchException):
    def pretty_print_str(self):
        err = f"[red][bold]:x: UnknownFunction:[/bold] {str(self)}[/red]"
        err += "\n[bold][red]Run `bench list` to see the available functions.[/red][/bold]"
        return err


class DimensionMismatch(OptbenchException):
    def __init__(self, message, expected: Optional[str] = None, got: Optional[int] = None):
        super().__init__(message)
        self.expected = expected
        self.got = got

    def pretty_print_str(self):
        err = f"[red][bold]:x: DimensionMismatch:[/bold] {str(self)}[/red]"
        if self.expected is not None:
            err += f"\n[bold][red]Expected dimension {self.expected}, got {self.got}.[/red][/bold]"
        return err


class DomainError(OptbenchException):
    """Raised when a formula is singular or undefined at the requested point."""

    def pretty_print_str(self):
        err = f"[red][bold]:x: DomainError:[/bold] {str(self)}[/red]"
        return err


class NonFiniteResult(OptbenchException):
    def pretty_print_str(self):
        err = f"[red][bold]:x: NonFiniteResult:[/bold] {str(self)}[/red]"
        return err


class OutOfBounds(OptbenchException):
    def pretty_print_str(self):
        err = f"[red][bold]:x: OutOfBounds:[/bold] {str(self)}[/red]"
        return err


class GridException(OptbenchException):
    def pretty_print_str(self):
        err = f"[red][bold]:x: GridException:[/bold] {str(self)}[/red]"
        return err


class ManifestException(OptbenchException):
    def __init__(self, message, errors: Optional[List[str]] = None):
        super().__init__(message)
        self.errors = errors or []

    def pretty_print_str(self):
        err = f"[red][bold]:x: ManifestException:[/bold] {str(self)}[/red]"
        for error in self.errors:
            err += f"\n\t[red]* {error}[/red]"
        return err


class BadConfigException(OptbenchException):
    pass
