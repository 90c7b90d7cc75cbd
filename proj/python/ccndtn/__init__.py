# SPDX-License-Identifier: Apache-2.0
"""Content-centric networking over delay-tolerant bundles.

Thin package wrapper around the compiled extension. The extension lives
next to this package in installed builds and on PYTHONPATH in tree builds.
"""

try:
    from ._ccndtn import *  # noqa: F401,F403
    from ._ccndtn import __version__  # noqa: F401
except ImportError:  # tree build: extension sits on PYTHONPATH, not in-package
    from _ccndtn import *  # noqa: F401,F403
    from _ccndtn import __version__  # noqa: F401
