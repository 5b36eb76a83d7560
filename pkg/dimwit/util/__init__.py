from .delayed_executor import DelayedExecutor
