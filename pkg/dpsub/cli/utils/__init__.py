from . import config, experiment
