use std::process::ExitCode;

use lfactor_lab::acceptance::{run_criterion, CRITERIA};

fn main() -> ExitCode {
    let filter: Option<u8> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for c in CRITERIA.iter().filter(|c| filter.is_none_or(|id| id == c.id)) {
        let r = run_criterion(c);
        println!("{r}");
        failed += usize::from(!r.passed());
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
