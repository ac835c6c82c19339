from typing import Any, Dict, List, Optional

EXIT_DOMAIN_ERROR = 1
EXIT_INVARIANT_VIOLATION = 2


class ConicError(Exception):
    """Base error; ``exit_code`` is what the CLI exits with."""

    exit_code: int = EXIT_DOMAIN_ERROR

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class ScalarFormatError(ConicError):
    def __init__(self, text: str):
        super().__init__(detail=f"Malformed scalar '{text}': expected an integer, 'p/q' with q>0, or '-inf'")


class ExpressionSyntaxError(ConicError):
    def __init__(self, message: str, line: int, column: int, context: str = ""):
        self.line = line
        self.column = column
        self.context = context
        detail = f"Syntax error at line {line}, column {column}: {message}"
        if context:
            detail = f"{detail}\n{context}"
        super().__init__(detail=detail)


class DegreeError(ConicError):
    def __init__(self, detail: str):
        super().__init__(detail=detail)


class ShapeInputError(ConicError):
    def __init__(self, detail: str):
        super().__init__(detail=detail)


class ChartError(ConicError):
    def __init__(self, detail: str):
        super().__init__(detail=detail)


class TreeValidationError(ConicError):
    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__(detail="Tree rejected: " + "; ".join(self.violations))


class ReconstructionError(ConicError):
    def __init__(self, detail: str):
        super().__init__(detail=detail)


class SeparationError(ConicError):
    def __init__(self, detail: str):
        super().__init__(detail=detail)


class DocumentError(ConicError):
    def __init__(self, kind: str, errors: Optional[List[Dict[str, Any]]] = None, detail: Optional[str] = None):
        self.kind = kind
        self.errors = errors or []
        if detail is None:
            parts = [f"{'.'.join(str(p) for p in e.get('loc', ()))}: {e.get('msg', '')}" for e in self.errors]
            detail = f"Invalid {kind} document: " + ("; ".join(parts) if parts else "unreadable")
        super().__init__(detail=detail)


class InvariantViolation(ConicError):
    exit_code = EXIT_INVARIANT_VIOLATION


class OracleConsistencyError(InvariantViolation):
    def __init__(self, detail: str):
        super().__init__(detail=detail)
