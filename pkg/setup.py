from setuptools import setup

import extremalgraph

setup(
    name='extremalgraph',
    version=extremalgraph.__version__,
    packages=['extremalgraph', 'extremalgraph.graph', 'extremalgraph.extremal', 'extremalgraph.invariants',
              'extremalgraph.search', 'extremalgraph.hfree', 'extremalgraph.exceptions'],
    license='MIT',
    author=extremalgraph.__author__,
    author_email=extremalgraph.__email__,
    maintainer=extremalgraph.__author__,
    maintainer_email=extremalgraph.__email__,
    description='Maximum number of edges of a graph with bounded clique number and bounded matching number',
    python_requires='>=3.10',
    install_requires=['pypubsub'],
    extras_require={'test': ['networkx', 'concurrencytest']},
    entry_points={'console_scripts': ['extremalgraph = extremalgraph.cli:main']}
)
