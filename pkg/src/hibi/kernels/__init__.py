"""Hot kernels with a compiled fast path.

The compiled extension is used when it imported and the input fits its
fixed-width representation; otherwise the pure-Python kernel runs. Both
produce identical results, which the test suite checks.
"""
from hibi.kernels import _pykernels as python_backend

try:
    from hibi.kernels import _ckernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

_active = compiled_backend or python_backend


def backend_name():
    return "compiled" if _active is compiled_backend else "python"


def use_backend(name):
    """Select ``"compiled"`` or ``"python"``; returns the previous name."""
    global _active
    previous = backend_name()
    if name == "compiled":
        if compiled_backend is None:
            raise RuntimeError("compiled kernels are not available")
        _active = compiled_backend
    elif name == "python":
        _active = python_backend
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def _dispatch(fname):
    py_fn = getattr(python_backend, fname)

    def call(*args, **kwargs):
        if _active is python_backend:
            return py_fn(*args, **kwargs)
        try:
            return getattr(_active, fname)(*args, **kwargs)
        except OverflowError:
            return py_fn(*args, **kwargs)

    call.__name__ = fname
    call.__doc__ = py_fn.__doc__
    return call


lub_table = _dispatch("lub_table")
distributive_witness = _dispatch("distributive_witness")
embedded_closure = _dispatch("embedded_closure")
enumerate_embedded = _dispatch("enumerate_embedded")
int_rank = _dispatch("int_rank")
