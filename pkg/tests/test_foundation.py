# -*- coding: utf-8 -*-

import dataclasses

from discriminantal_arrangement.foundation import BaseLogger, stderr_printer


@dataclasses.dataclass(frozen=True)
class Countdown(BaseLogger):
    start: int = dataclasses.field(default=3)

    def run(self) -> int:
        self.log("--- Step 1 - Count down")
        for i in range(self.start, 0, -1):
            self.log(str(i))
        return self.start


def test_base_logger():
    lines = []
    assert Countdown(start=2, printer=lines.append).run() == 2
    assert lines == ["--- Step 1 - Count down", "2", "1"]

    lines = []
    Countdown(verbose=False, printer=lines.append).run()
    assert lines == []


def test_stderr_printer(capsys):
    printer = stderr_printer()
    printer("hello [bold]world[/bold]")
    captured = capsys.readouterr()
    assert captured.out == ""
    # markup is printed verbatim
    assert "hello [bold]world[/bold]" in captured.err


if __name__ == "__main__":
    from discriminantal_arrangement.tests import run_cov_test

    run_cov_test(
        __file__,
        "discriminantal_arrangement.foundation",
        preview=False,
    )
