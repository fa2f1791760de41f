fn main() {
    let (code, stdout, stderr) = polyopt::cli::main_with(std::env::args_os());
    print!("{stdout}");
    eprint!("{stderr}");
    std::process::exit(code);
}
