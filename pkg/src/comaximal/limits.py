"""Default size caps.

Every cap can be overridden per call; these are the package-wide
defaults and the values mirrored by the CLI environment variables.
"""

from __future__ import annotations

# Largest ring any constructor will build by default.
DEFAULT_MAX_RING_SIZE = 4096

# Largest vertex count the exact clique/chromatic solvers accept.
DEFAULT_EXACT_VERTEX_CAP = 512

# Largest ring size for which ring isomorphism search is attempted.
DEFAULT_RING_ISO_CAP = 32

# Largest vertex count for the graph isomorphism search.
DEFAULT_GRAPH_ISO_CAP = 2000

# Largest vertex count for canonical certificates.
DEFAULT_CERTIFICATE_CAP = 64

# Full Cayley tables are materialised only up to this ring size;
# larger rings evaluate operations through row functions.
TABLE_LIMIT = 256

# Up to this ring size, maximal-ideal enumeration re-derives the answer
# with the brute-force oracle and insists the two agree.
CROSSCHECK_LIMIT = 64
