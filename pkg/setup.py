from setuptools import setup

setup(cffi_modules=["src/quivalg/_sweep_build.py:ffibuilder"])
