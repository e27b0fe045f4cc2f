package jobs;

public class Job {
    public long run() {
        return 0;
    }
}
