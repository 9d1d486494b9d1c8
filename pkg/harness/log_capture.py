"""Append everything a run prints to a run log, keeping it on the console too."""

import sys
from datetime import datetime
from pathlib import Path


class _LoggedStream:
    """Console stream whose output is also appended to the run log."""

    def __init__(self, console, run_log: "RunLog"):
        self.console = console
        self._run_log = run_log

    def write(self, text):
        self.console.write(text)
        self.console.flush()
        self._run_log.append(text)
        return len(text)

    def flush(self):
        self.console.flush()
        self._run_log.flush()

    def isatty(self):
        isatty = getattr(self.console, "isatty", None)
        return bool(isatty and isatty())


class RunLog:
    """
    One open run log. start() redirects sys.stdout/sys.stderr through it and
    writes a header naming the command; stop() puts the console back.
    A log write that fails is dropped so the run itself carries on.
    """

    def __init__(self, path, log_file):
        self.path = Path(path)
        self._file = log_file

    @classmethod
    def open(cls, path):
        """RunLog appending to path, or None if the file cannot be opened."""
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            log_file = open(path, "a", encoding="utf-8")
        except OSError:
            return None
        return cls(path, log_file)

    def append(self, text: str) -> None:
        if self._file is None:
            return
        try:
            self._file.write(text)
            self._file.flush()
        except OSError:
            pass

    def flush(self) -> None:
        if self._file is None:
            return
        try:
            self._file.flush()
        except OSError:
            pass

    def start(self, command: str) -> None:
        stamp = datetime.now().isoformat(timespec="seconds")
        self.append(f"--- {stamp} {command} ---\n")
        sys.stdout = _LoggedStream(sys.stdout, self)
        sys.stderr = _LoggedStream(sys.stderr, self)

    def stop(self) -> None:
        for name in ("stdout", "stderr"):
            stream = getattr(sys, name)
            if isinstance(stream, _LoggedStream) and stream._run_log is self:
                setattr(sys, name, stream.console)
        if self._file is not None:
            try:
                self._file.close()
            except OSError:
                pass
            self._file = None
