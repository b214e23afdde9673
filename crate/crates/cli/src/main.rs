fn main() {
    // die quietly on SIGPIPE so `bandcalc ... | head` works
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(bandcalc_cli::run(std::env::args().collect()));
}
