fn main() {
    // CLI wiring lands once the engine layers are in place.
    eprintln!("braidcalc: not yet wired");
    std::process::exit(2);
}
