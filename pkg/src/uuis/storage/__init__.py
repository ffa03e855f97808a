from .gateway import (
    OP_CONTAINS,
    OP_EQ,
    OP_GE,
    OP_IN,
    OP_LT,
    OP_NULL,
    Criterion,
    MemoryStore,
    Mutation,
    Page,
    Ref,
)
from .filestore import FileStore
from .seed import load_seed, read_fixture

__all__ = [
    "Criterion", "Mutation", "Page", "Ref", "MemoryStore", "FileStore",
    "load_seed", "read_fixture",
    "OP_EQ", "OP_CONTAINS", "OP_IN", "OP_LT", "OP_GE", "OP_NULL",
]
