import logging
import sys

import click

from Controller.emitter import FORMATS, GRANULARITIES, NAME_PATTERNS
from Controller.logger import setup_logger
from Controller.pipeline import CliRequest, run_pipeline

CONTEXT_SETTINGS = {"help_option_names": ["-h", "--help"]}


@click.command(context_settings=CONTEXT_SETTINGS)
@click.argument("lang")
@click.argument("src")
@click.argument("output")
@click.option("--auto-include", is_flag=True, help="Auto include all paths under the include directories.")
@click.option("-i", "--include", "includes", multiple=True, help="The files of searching path.")
@click.option("-d", "--dir", "output_dir", default=".", show_default=True, help="The output directory.")
@click.option("-f", "--format", "output_format", type=click.Choice(FORMATS), default="json", show_default=True,
              help="The output format.")
@click.option("-g", "--granularity", type=click.Choice(GRANULARITIES), default="file", show_default=True,
              help="Granularity of dependency.")
@click.option("-s", "--strip-leading-path", is_flag=True, help="Strip the leading path.")
@click.option("--show-language", is_flag=True, help="Show language info in dependency type.")
@click.option("-m", "--n-map-files", "emit_name_map", is_flag=True, help="Output the id to name map file.")
@click.option("-p", "--namepattern", "name_pattern", type=click.Choice(NAME_PATTERNS), default="dot",
              show_default=True, help="The name path separators.")
@click.option("-t", "--truth", type=click.Path(dir_okay=False), default=None,
              help="Ground-truth file to verify the extracted relations against.")
@click.option("--debug", is_flag=True, help="Log every visited node.")
@click.option("--max-rounds", type=click.IntRange(min=1), default=5, show_default=True,
              help="Upper bound on type inference rounds.")
def depends(lang, src, output, auto_include, includes, output_dir, output_format, granularity,
            strip_leading_path, show_language, emit_name_map, name_pattern, truth, debug, max_rounds):
    """Extract the dependencies of the LANG sources under SRC into OUTPUT files."""
    request = CliRequest(
        lang=lang, src=src, output=output, includes=list(includes), auto_include=auto_include,
        output_dir=output_dir, format=output_format, granularity=granularity,
        strip_leading_path=strip_leading_path, show_language=show_language, emit_name_map=emit_name_map,
        name_pattern=name_pattern, truth=truth, debug=debug, max_rounds=max_rounds,
    )
    logger = setup_logger(logging.DEBUG if debug else logging.INFO)
    logger.info(f"Starting extraction of {lang} sources in {src}...")
    exit_code, _ = run_pipeline(request, logger)
    sys.exit(exit_code)


def parse_args(argv: list[str]) -> CliRequest:
    """
    Parses a command line into a CliRequest without running it.

    Raises:
        - click.UsageError: On a missing positional or an unknown flag.
    """
    with depends.make_context("depends", list(argv)) as context:
        params = context.params
    return CliRequest(
        lang=params["lang"], src=params["src"], output=params["output"], includes=list(params["includes"]),
        auto_include=params["auto_include"], output_dir=params["output_dir"], format=params["output_format"],
        granularity=params["granularity"], strip_leading_path=params["strip_leading_path"],
        show_language=params["show_language"], emit_name_map=params["emit_name_map"],
        name_pattern=params["name_pattern"], truth=params["truth"], debug=params["debug"],
        max_rounds=params["max_rounds"],
    )


if __name__ == '__main__':
    depends()
