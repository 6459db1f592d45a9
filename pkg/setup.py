from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: install the pure-Python package; hexforms.kernels falls
    # back to the interpreted implementations at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "hexforms._speedups",
                ["src/hexforms/_speedups.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
