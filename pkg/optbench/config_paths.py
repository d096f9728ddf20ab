from pathlib import Path


__config_root__ = Path("~/.optbench").expanduser()
audit_cache_path = __config_root__ / "audit_cache.json"
