package jobs;

public interface Task {
    int run();
}
