"""
Domain-specific exceptions
"""


class TutteEngineException(Exception):
    """Base exception for the Tutte polynomial engine"""
    pass


class ParseError(TutteEngineException):
    """Raised when polynomial or graph text cannot be parsed"""

    def __init__(self, message: str, source: str = "", line_number: int = 0,
                 position: int = None):
        self.source = source or ""
        self.line_number = line_number or 0
        self.position = position

        if source:
            message = f"Error parsing {source}: {message}"
        if line_number:
            message = f"{message} (line {line_number})"
        if position is not None:
            message = f"{message} (position {position})"

        super().__init__(message)


class ValidationError(TutteEngineException):
    """Raised when data validation fails"""
    pass


class ConfigurationError(TutteEngineException):
    """Raised when configuration is invalid"""
    pass


class FileProcessingError(TutteEngineException):
    """Raised when file processing fails"""

    def __init__(self, message: str, filename: str = ""):
        self.filename = filename or ""
        if filename:
            message = f"Error processing {filename}: {message}"
        super().__init__(message)


class NotDivisible(TutteEngineException):
    """Raised when an exact polynomial division leaves a remainder"""

    def __init__(self, message: str, remainder=None):
        self.remainder = remainder
        super().__init__(message)


class GraphError(TutteEngineException):
    """Base class for invalid graph operations"""
    pass


class UnknownEdge(GraphError):
    """Raised when an edge id does not exist in the graph"""

    def __init__(self, edge_id: int):
        self.edge_id = edge_id
        super().__init__(f"Unknown edge id: {edge_id}")


class UnknownVertex(GraphError):
    """Raised when a vertex index is out of range"""

    def __init__(self, vertex: int, vertex_count: int = None):
        self.vertex = vertex
        message = f"Unknown vertex: {vertex}"
        if vertex_count is not None:
            message = f"{message} (graph has {vertex_count} vertices)"
        super().__init__(message)


class EmptyVertexSet(GraphError):
    """Raised when a vertex set to identify is empty"""
    pass


class Disconnected(GraphError):
    """Raised when an operation requires a connected graph"""
    pass


class TooManyEdges(TutteEngineException):
    """Raised when subset expansion is requested above the edge limit"""

    def __init__(self, edge_count: int, limit: int):
        self.edge_count = edge_count
        self.limit = limit
        super().__init__(f"Subset expansion limited to {limit} edges, graph has {edge_count}")


class MissingMark(TutteEngineException):
    """Raised when a family needs the third mark w but the base has none"""
    pass


class BadN(TutteEngineException):
    """Raised when a family index is out of the supported range"""

    def __init__(self, n, minimum: int = 1):
        self.n = n
        self.minimum = minimum
        super().__init__(f"Family index n={n} is invalid (requires n >= {minimum})")


class InfeasibleMethod(TutteEngineException):
    """Raised when the requested computation method cannot serve the request"""
    pass


class VerificationFailure(TutteEngineException):
    """Raised when a verification check finds a counterexample"""

    def __init__(self, message: str, counterexample: str = ""):
        self.counterexample = counterexample or ""
        if counterexample:
            message = f"{message}: {counterexample}"
        super().__init__(message)
