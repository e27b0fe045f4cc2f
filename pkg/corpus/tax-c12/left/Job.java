package jobs;

public class Job implements Task {
    public int run() {
        return 0;
    }
}
