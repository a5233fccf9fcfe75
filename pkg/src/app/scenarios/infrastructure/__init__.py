from .json_report_repository import JsonReportRepository

__all__ = ["JsonReportRepository"]
