//! Driving the command-line front end in process.
//!
//! The same invocations work with the binary:
//!
//! ```bash
//! cargo run -p weak-freiman -- sequence --group '{"family":"cyclic","m":7}' --set '[1,2,4]'
//! cargo run -p weak-freiman --example cli_in_process
//! ```

use weak_freiman::cli;

fn main() {
    let invocations: [&[&str]; 7] = [
        &["sequence", "--group", r#"{"family":"cyclic","m":7}"#, "--set", "[1,2,4]"],
        &["verify", "--group", r#"{"family":"integers"}"#, "--ordering", "[1,-1,2]"],
        &["rectify", "--group", r#"{"family":"dicyclic","m":29}"#, "--set", r#"[{"s":0,"r":1},{"s":1,"r":0}]"#],
        &["--output", "text", "sequence", "--group", r#"{"family":"dihedral","m":29}"#, "--set", r#"[{"x":1,"h":[1]},{"x":6,"h":[1]}]"#],
        &["sequence", "--strict-bounds", "--group", r#"{"family":"cyclic","m":5}"#, "--set", "[1,2,3,4]"],
        &["sweep", "--group", r#"{"family":"dihedral","m":7}"#, "--k", "3", "--workers", "2"],
        &["sequence", "--group", r#"{"family":"cyclic","m":7}"#, "--set", "[1,1]"],
    ];
    for args in invocations {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(std::iter::once("weak-freiman").chain(args.iter().copied()), &mut out, &mut err);
        println!("$ weak-freiman {}", args.join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        print!("{}", String::from_utf8_lossy(&err));
        println!("exit {code}\n");
    }
}
