from optbench.api.config import AuditConfig, DEParams, NelderMeadParams, ProbeConfig

__all__ = ["AuditConfig", "DEParams", "NelderMeadParams", "ProbeConfig"]
