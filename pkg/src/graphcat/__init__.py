"""Finite graphs as relations: categories of graphs, products, minors, orders and
transformation graphs, with exhaustive verifiers sized for small examples."""
from .errors import *  # noqa: F401,F403
from .graph import *  # noqa: F401,F403
from .named import *  # noqa: F401,F403
from .io import *  # noqa: F401,F403
from .relational import *  # noqa: F401,F403
from .morphisms import *  # noqa: F401,F403
from .invariants import *  # noqa: F401,F403
from .products import *  # noqa: F401,F403
from .catalog import *  # noqa: F401,F403
from .minors import *  # noqa: F401,F403
from .orders import *  # noqa: F401,F403
from .transform import *  # noqa: F401,F403

__version__ = "0.1.0"
