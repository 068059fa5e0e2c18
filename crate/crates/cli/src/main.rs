use plactic::Cancel;

fn main() {
    let cancel = Cancel::new();
    let on_interrupt = cancel.clone();
    let _ = ctrlc::set_handler(move || on_interrupt.cancel());
    let code = plactic_cli::run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr(), &cancel);
    std::process::exit(code);
}
