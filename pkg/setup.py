from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython at build time: install pure-python only, the feasibility
    # kernel falls back to fdsecrecy._feaskernel_py at import.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("fdsecrecy._feaskernel", ["src/fdsecrecy/_feaskernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
