import os

# Grabs the folder where the script runs.
basedir = os.path.abspath(os.path.dirname(__file__))

# Debug mode keeps log output on the console instead of HYPER_LOG_FILE.
DEBUG = False

# Connect to the database

SQLALCHEMY_TRACK_MODIFICATIONS = False

SQLALCHEMY_DATABASE_URI = 'sqlite:///' + os.path.join(basedir, 'hyperverify.db')

# Verification defaults; HYPER_* environment variables override them.
HYPER_TOLERANCE = 1e-8
HYPER_QUAD_TOL = 1e-11
HYPER_SEMI_INFINITE_TOL = 1e-9
HYPER_THREADS = 1
HYPER_LOG_FILE = 'error.log'
HYPER_PERSIST_RUNS = True
