package jobs;

public class Job {
    public int run() {
        return 0;
    }
}
