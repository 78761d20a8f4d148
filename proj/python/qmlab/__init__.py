try:
    from ._qmlab import *  # noqa: F401,F403
    from ._qmlab import __doc__  # noqa: F401
except ImportError:  # development layout: extension built by cmake on sys.path
    from _qmlab import *  # noqa: F401,F403
    from _qmlab import __doc__  # noqa: F401
