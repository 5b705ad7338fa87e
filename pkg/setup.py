"""Build hook for the optional compiled kernels.

Metadata lives in pyproject.toml. When Cython or numpy are missing the
package still installs and falls back to the pure-Python scans at import.
"""

from setuptools import setup

try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:  # pragma: no cover - exercised only on bare toolchains
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "twocat._kernels",
                sources=["src/twocat/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
