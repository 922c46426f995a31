//! Drive the command-line front end in-process.

fn main() {
    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quivers/jordan.json");
    let mut out = Vec::new();
    let mut err = Vec::new();
    for args in [
        vec!["quiverhall", "cartan", file],
        vec!["quiverhall", "dims", file, "--nu", "3", "--all-types"],
        vec!["quiverhall", "verify", "m-dims", file, "--nu-max", "3", "--q", "2"],
    ] {
        let code = quiverhall::cli::run(args, &mut out, &mut err);
        println!("exit {code}");
    }
    print!("{}", String::from_utf8_lossy(&out));
}
