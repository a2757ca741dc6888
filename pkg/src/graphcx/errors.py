class GraphComplexError(Exception):
    pass


class StructureError(GraphComplexError, ValueError):
    pass


class PreconditionError(GraphComplexError, ValueError):
    pass


class CapacityError(GraphComplexError):
    pass


class VerificationError(GraphComplexError):
    pass


class BasisStoreError(GraphComplexError):
    pass


class BasisStorePermissionError(BasisStoreError):
    pass
