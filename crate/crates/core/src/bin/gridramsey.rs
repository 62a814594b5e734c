fn main() {
    std::process::exit(grid_ramsey::cli::run(std::env::args_os()));
}
