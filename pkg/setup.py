from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext = Extension(
        "sachs4.kernels._native",
        sources=["src/sachs4/kernels/_native.pyx"],
        extra_compile_args=["-O3"],
    )
    # a failed compile degrades to the pure-Python kernel backend
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
