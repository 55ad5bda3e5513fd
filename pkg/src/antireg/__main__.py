from antireg.cli import run

run()
