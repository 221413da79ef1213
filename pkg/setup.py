from setuptools import setup, find_packages

setup(
    name="polar_gaps",
    version="0.1.0",
    packages=find_packages(include=['polar_gaps', 'polar_gaps.*', 'config']),
    package_data={'config': ['*.json']},
    python_requires=">=3.8",
    install_requires=[
        'numpy>=1.21.0',
        'galois>=0.3.0',
        'pandas>=1.0.0',
        'psutil>=5.9.0',
        'python-dotenv>=0.19.0',
        'typing-extensions>=4.0.0',
    ],
    entry_points={
        'console_scripts': ['polar-gaps=polar_gaps.src.main:main'],
    },
)
