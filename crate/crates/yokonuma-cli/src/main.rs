fn main() {
    std::process::exit(yokonuma_cli::run());
}
