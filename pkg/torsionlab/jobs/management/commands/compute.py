from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from torsionlab.exceptions import TorsionlabError
from torsionlab.jobs.parser import parse_job_file
from torsionlab.jobs.reports import render_json, render_text
from torsionlab.jobs.runner import JobRunner


class Command(BaseCommand):
    help = "Run the tasks of a job file and print or write the report."

    def add_arguments(self, parser):
        parser.add_argument("path", help="job file")
        parser.add_argument(
            "--task",
            action="append",
            dest="tasks",
            metavar="NAME",
            help="run only this task (repeatable); a task kind the job does not declare runs with defaults",
        )
        parser.add_argument("--format", choices=("text", "json"), default=None)
        parser.add_argument("--output", default=None, help="write the report here instead of stdout")
        parser.add_argument("--seed", type=int, default=None, help="seed for randomized tasks")
        parser.add_argument(
            "--check-invariants",
            action="store_true",
            dest="check_invariants",
            help="also run the invariant checks tied to each task",
        )

    def handle(self, *args, **options):
        config = settings.TORSIONLAB
        seed = config["SEED"] if options["seed"] is None else options["seed"]
        report_format = options["format"] or config["FORMAT"]
        try:
            job = parse_job_file(options["path"])
            runner = JobRunner(
                job,
                seed=seed,
                check_invariants=options["check_invariants"],
                random_trials=config["RANDOM_TRIALS"],
                conjugators=config["CONJUGATORS"],
            )
            results = runner.run(options["tasks"])
            if report_format == "json":
                document = render_json(job, results, seed)
            else:
                document = render_text(results, factor=config["FACTOR_REPORTS"])
        except TorsionlabError as exc:
            raise CommandError(str(exc))

        if options["output"]:
            try:
                Path(options["output"]).write_text(document, encoding="utf-8")
            except OSError as exc:
                raise CommandError(f"cannot write {options['output']}: {exc.strerror or exc}")
        else:
            self.stdout.write(document, ending="")

        failed = [result.name for result in results if not result.ok]
        if failed:
            raise CommandError(f"{len(failed)} task(s) did not succeed: {', '.join(failed)}")
