use dident::basis::{run_builtin_claim, CampaignOptions};
use std::time::Instant;

fn main() {
    let opts = CampaignOptions::default();
    let args: Vec<String> = std::env::args().skip(1).collect();
    for name in &args {
        let start = Instant::now();
        match run_builtin_claim(name, &opts) {
            Ok(report) => {
                println!("=== {} [{:?}] pass={}", name, start.elapsed(), report.pass);
                for item in report.items.iter().filter(|i| !i.pass) {
                    println!(
                        "  FAIL {} {} -- {}{}",
                        item.kind,
                        item.subject,
                        item.outcome,
                        item.witness
                            .as_ref()
                            .map(|w| format!(" [witness: {}]", w.join(", ")))
                            .unwrap_or_default()
                    );
                }
                if args.len() == 1 {
                    print!("{}", report);
                }
            }
            Err(e) => println!("=== {} ERROR {:?} [{:?}]", name, e, start.elapsed()),
        }
    }
}
