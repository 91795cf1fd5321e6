import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PRIMEKIT_PURE_ONLY") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        exts = cythonize(
            [
                Extension(
                    "primekit._kernel64",
                    ["src/primekit/_kernel64.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
        for ext in exts:
            # keep the install usable on toolchain-less hosts; the package
            # falls back to the pure-Python kernel at import time
            ext.optional = True
        ext_modules = exts

setup(ext_modules=ext_modules)
