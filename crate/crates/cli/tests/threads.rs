//! Separate binary: these tests change the process environment.

use squareice_cli::{run, THREADS_ENV};

fn code(args: &[&str]) -> i32 {
    let argv = std::iter::once("squareice").chain(args.iter().copied());
    run(argv, &mut Vec::new(), &mut Vec::new())
}

#[test]
fn thread_count_from_the_environment() {
    std::env::set_var(THREADS_ENV, "2");
    assert_eq!(
        code(&["verify", "all", "--max-n", "2", "--max-part", "2"]),
        0
    );
    std::env::set_var(THREADS_ENV, "many");
    assert_eq!(
        code(&["verify", "all", "--max-n", "1", "--max-part", "1"]),
        2
    );
    std::env::remove_var(THREADS_ENV);
}
