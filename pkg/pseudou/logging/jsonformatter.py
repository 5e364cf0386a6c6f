from pythonjsonlogger import jsonlogger


class JsonFormatter(jsonlogger.JsonFormatter):
    def add_fields(self, log_record, record, message_dict):
        """Remap `log_record`s fields to time/severity/source."""
        super(JsonFormatter, self).add_fields(log_record, record, message_dict)
        log_record["time"] = log_record.get("time", log_record.get("asctime"))
        log_record["severity"] = log_record.get("severity", record.levelname)
        log_record["source"] = log_record.get("source", record.name)
        for key in ("asctime", "levelname", "name"):
            log_record.pop(key, None)
