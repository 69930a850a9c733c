from .utils import config, experiment
