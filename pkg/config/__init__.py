from .settings import ConfigurationError, RunConfig, Settings, build_run_config, load_config, load_settings

__all__ = ['ConfigurationError', 'RunConfig', 'Settings', 'build_run_config', 'load_config', 'load_settings']
