from setuptools import setup, find_packages


setup(
   name='macbound',
   version='1.0',
   description='Block-sample MAC-Bayes generalization bounds and the '
               'numerical experiments that exercise them.',
   author='Chris Kedzie',
   author_email='kedzie@cs.columbia.edu',
   packages=find_packages(exclude=["tests"]),
   install_requires = ["torch", "numpy", "scipy", "pandas",
                       "pytorch-ignite", "ujson", "colorama"],
   entry_points = {
       "console_scripts": ["macbound=macbound.cli:main"]},
)
